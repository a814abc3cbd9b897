"""pkit: weight/arrow diagram combinatorics for representations of the
periplectic Lie superalgebra p(n) -- decomposition numbers, translation
functors, duality, socles and block classification, with exhaustive
window-bounded verification of every identity involved.
"""

from .weights import (Weight, WeightDiagram, weight_to_diagram,
                      diagram_to_weight, leq, is_typical, shift, gl_dim,
                      kac_dims, kappa, q_parity, render_ascii)
from .arrows import (ArrowDiagram, g, r_plus, r_minus, build_arrows, up_set,
                     down_set, member_up, member_down, arm_leg,
                     arm_leg_condition, no_zero_pair_sums)
from .grothendieck import (BasisLabel, GVector, DELTA, NABLA, SIMPLE, PROJ,
                           proj_to_delta, proj_to_nabla, delta_to_simple,
                           nabla_to_simple, hom_dim, pairing, injective_hull,
                           ext_possible)
from .translation import (WedgeVector, theta_delta, theta_nabla, apply_theta,
                          theta_proj, theta_simple, wedge_map, ef_op,
                          verify_tl)
from .structure import (dagger, sharp, dual_kac, max_solid_slide,
                        max_dashed_slide, cosocle_nabla, socle_delta)
from .blocks import (BlockLabel, block_of, block_action,
                     block_components_oracle, blocks_report)
from .verify import run_suite, report_failures

__version__ = "0.1.0"
