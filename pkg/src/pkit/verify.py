"""Window-parameterized verification suites.  Each suite replays the
combinatorial identities of the corresponding module over every dominant
weight whose support lies in the window, and returns a JSON-able report
{"suite": ..., "checks": [{"relation", "checked", "failures"}, ...]}.
"""

from __future__ import annotations

from .weights import (Weight, weight_to_diagram, leq, is_typical, kappa)
from .arrows import (build_arrows, up_ball_sets, down_ball_sets, member_up,
                     member_down)
from .grothendieck import (proj_to_delta, proj_to_nabla, delta_to_simple,
                           nabla_to_simple, hom_dim, pairing)
from .translation import (verify_tl, theta_proj_consistency, theta_proj,
                          theta_simple, all_ball_tuples)
from .structure import (sharp, dagger, dual_kac, max_solid_slide,
                        max_dashed_slide, cosocle_nabla, socle_delta)
from .blocks import blocks_report, block_components_oracle


def _check(name):
    return {"relation": name, "checked": 0, "failures": []}


def _weights(n, window):
    return [Weight.from_balls(n, b) for b in all_ball_tuples(n, window)]


def suite_arrows(n, window) -> dict:
    singleton = _check("up_down_singleton_intersection")
    disjoint = _check("target_sets_disjoint")
    dashed_cover = _check("every_ball_one_dashed_target")
    card = _check("move_set_cardinality_product")
    members = _check("membership_formula_matches_enumeration")
    ordering = _check("moves_increase_weight_order")

    for w in _weights(n, window):
        d = weight_to_diagram(w)
        ad = build_arrows(d)
        ups = up_ball_sets(n, w.balls)
        downs = down_ball_sets(n, w.balls)

        singleton["checked"] += 1
        if ups & downs != {w.balls}:
            singleton["failures"].append({"balls": list(w.balls)})

        disjoint["checked"] += 1
        solid_all = [j for t in ad.solid.values() for j in t]
        dashed_all = [i for t in ad.dashed.values() for i in t]
        if len(solid_all) != len(set(solid_all)) or \
                len(dashed_all) != len(set(dashed_all)):
            disjoint["failures"].append({"balls": list(w.balls)})

        dashed_cover["checked"] += 1
        if sorted(dashed_all) != sorted(w.balls):
            dashed_cover["failures"].append({"balls": list(w.balls)})

        card["checked"] += 1
        pu = 1
        for i in w.balls:
            pu *= 1 + len(ad.solid[i])
        pdn = 1
        for t in ad.dashed.values():
            pdn *= 1 + len(t)
        if pu != len(ups) or pdn != len(downs):
            card["failures"].append({"balls": list(w.balls)})

        members["checked"] += 1
        ok = (all(member_up(d, Weight.from_balls(n, b)) for b in ups)
              and all(member_down(d, Weight.from_balls(n, b)) for b in downs))
        if ok:
            # negatives: cross-test each set against the other formula
            for other in list(downs):
                if other not in ups and member_up(d, Weight.from_balls(n, other)):
                    ok = False
            for other in list(ups):
                if other not in downs and member_down(d, Weight.from_balls(n, other)):
                    ok = False
        if not ok:
            members["failures"].append({"balls": list(w.balls)})

        ordering["checked"] += 1
        movers = [Weight.from_balls(n, b) for b in (ups | downs)]
        if not all(leq(w, m) for m in movers):
            ordering["failures"].append({"balls": list(w.balls)})

    return {"suite": "arrows", "checks": [singleton, disjoint, dashed_cover,
                                          card, members, ordering]}


def suite_bgg(n, window) -> dict:
    bgg1 = _check("bgg_delta_reciprocity")
    bgg2 = _check("bgg_nabla_reciprocity")
    multfree = _check("projective_multiplicity_free")
    symmetry = _check("hom_dim_shift_symmetry")
    pair = _check("euler_pairing_equals_hom_dim")
    triangular = _check("basis_change_unitriangular")

    ws = _weights(n, window)
    ds = {}
    ns = {}
    for mu in ws:
        ds[mu.balls] = {l.weight.balls: c
                        for l, c in delta_to_simple(mu).terms.items()}
        ns[mu.balls] = {l.weight.balls: c
                        for l, c in nabla_to_simple(mu).terms.items()}

        triangular["checked"] += 1
        good = ds[mu.balls].get(mu.balls) == 1 and ns[mu.balls].get(mu.balls) == 1
        good = good and all(
            leq(Weight.from_balls(n, b), mu) for b in ds[mu.balls])
        good = good and all(
            leq(Weight.from_balls(n, b), mu) for b in ns[mu.balls])
        if not good:
            triangular["failures"].append({"balls": list(mu.balls)})

    ds_any = dict(ds)  # extended on demand for weights leaving the window

    def ds_for(balls):
        if balls not in ds_any:
            ds_any[balls] = {l.weight.balls: c for l, c in
                             delta_to_simple(Weight.from_balls(n, balls)).terms.items()}
        return ds_any[balls]

    for lam in ws:
        ups = up_ball_sets(n, lam.balls)
        downs = down_ball_sets(n, lam.balls)
        # expanded simple multiplicities of the projective
        pl = {}
        for mub in ups:
            for nub, c in ds_for(mub).items():
                pl[nub] = pl.get(nub, 0) + c
        for mu in ws:
            bgg1["checked"] += 1
            if (1 if mu.balls in ups else 0) != ns[mu.balls].get(lam.balls, 0):
                bgg1["failures"].append({"lam": list(lam.balls),
                                         "mu": list(mu.balls)})
            bgg2["checked"] += 1
            if (1 if mu.balls in downs else 0) != ds[mu.balls].get(lam.balls, 0):
                bgg2["failures"].append({"lam": list(lam.balls),
                                         "mu": list(mu.balls)})
            multfree["checked"] += 1
            coeff = pl.get(mu.balls, 0)
            if coeff not in (0, 1) or coeff != hom_dim(mu, lam):
                multfree["failures"].append({"lam": list(lam.balls),
                                             "mu": list(mu.balls)})
            symmetry["checked"] += 1
            if hom_dim(lam, mu) != hom_dim(mu.shift(2), lam):
                symmetry["failures"].append({"lam": list(lam.balls),
                                             "mu": list(mu.balls)})
            pair["checked"] += 1
            if pairing(proj_to_delta(lam), proj_to_nabla(mu)) != hom_dim(lam, mu):
                pair["failures"].append({"lam": list(lam.balls),
                                         "mu": list(mu.balls)})
        if any(c not in (0, 1) for c in pl.values()):
            multfree["failures"].append({"lam": list(lam.balls)})

    return {"suite": "bgg", "checks": [bgg1, bgg2, multfree, symmetry, pair,
                                       triangular]}


def suite_tl(n, window) -> dict:
    rep = verify_tl(n, window)
    return {"suite": "tl", "checks": rep["relations"]}


def suite_proj(n, window) -> dict:
    lo, hi = window
    cons = theta_proj_consistency(n, window)
    simple = _check("translated_simples_disjoint_01")
    for i in range(lo, hi + 3):
        seen = {}
        for w in _weights(n, window):
            v = theta_simple(i, w)
            simple["checked"] += 1
            if any(c != 1 for c in v.terms.values()):
                simple["failures"].append({"balls": list(w.balls), "i": i})
            for l in v.terms:
                if l.weight.balls in seen and seen[l.weight.balls] != w.balls:
                    simple["failures"].append(
                        {"i": i, "mu": list(l.weight.balls),
                         "lams": [list(seen[l.weight.balls]), list(w.balls)]})
                seen[l.weight.balls] = w.balls
    return {"suite": "proj", "checks": [cons, simple]}


def suite_duality(n, window) -> dict:
    invol = _check("sharp_involution")
    typ = _check("sharp_typical_closed_form")
    mono = _check("dagger_moves_rightward")
    kacdual = _check("kac_dual_involution")
    for w in _weights(n, window):
        s, m = sharp(w)
        invol["checked"] += 1
        s2, m2 = sharp(s)
        if s2 != w or m2 != m:
            invol["failures"].append({"balls": list(w.balls)})
        if is_typical(w):
            typ["checked"] += 1
            mirror = Weight(n, tuple(-c + (1 - n) for c in reversed(w.coords)))
            if s != mirror:
                typ["failures"].append({"balls": list(w.balls)})
        mono["checked"] += 1
        d = dagger(w)
        if not all(a >= b for a, b in zip(d.balls, w.balls)):
            mono["failures"].append({"balls": list(w.balls)})
        kacdual["checked"] += 1
        if dual_kac("Delta", dual_kac("Delta", w)) != w or \
                dual_kac("Nabla", dual_kac("Nabla", w)) != w:
            kacdual["failures"].append({"balls": list(w.balls)})
    return {"suite": "duality", "checks": [invol, typ, mono, kacdual]}


def suite_socle(n, window) -> dict:
    shift_id = _check("max_dashed_slide_shift_identity")
    inverse = _check("socle_cosocle_inverse_search")
    typical_fix = _check("typical_cosocle_fixed_point")
    for t in _weights(n, window):
        shift_id["checked"] += 1
        if max_dashed_slide(t.shift(2)) != max_solid_slide(t):
            shift_id["failures"].append({"balls": list(t.balls)})
        lam = max_solid_slide(t)
        inverse["checked"] += 1
        try:
            # cosocle_nabla cross-checks the closed form internally
            tau = cosocle_nabla(lam)
            tau2 = socle_delta(lam)
            ok = max_solid_slide(tau) == lam and tau2 == tau.shift(2)
        except RuntimeError:
            ok = False
        if not ok:
            inverse["failures"].append({"balls": list(t.balls)})
        if is_typical(t):
            # typical weights have no adjacent balls, hence no solid arrows
            typical_fix["checked"] += 1
            if max_solid_slide(t) != t:
                typical_fix["failures"].append({"balls": list(t.balls)})
    return {"suite": "socle", "checks": [shift_id, inverse, typical_fix]}


def suite_blocks(n, window) -> dict:
    lo, hi = window
    rep = blocks_report(n, window)
    purity = _check("kappa_constant_on_components")
    purity["checked"] = rep["component_count"]
    if rep["components_mixing_kappa"]:
        purity["failures"].append({"mixing_components":
                                   rep["components_mixing_kappa"]})
    interior = _check("interior_components_are_kappa_levels")
    comps = block_components_oracle(n, window)
    comp_of = {}
    for ci, c in enumerate(comps):
        for w in c["weights"]:
            comp_of[w.balls] = ci
    by_kappa = {}
    for w in _weights(n, (lo + 2 * n, hi - 2 * n)):
        by_kappa.setdefault(kappa(w), set()).add(comp_of[w.balls])
    for k, cs in sorted(by_kappa.items()):
        interior["checked"] += 1
        if len(cs) != 1:
            interior["failures"].append({"kappa": k, "components": len(cs)})
    action = rep["block_action"]
    return {"suite": "blocks", "checks": [purity, interior, action]}


SUITES = {
    "arrows": suite_arrows,
    "bgg": suite_bgg,
    "tl": suite_tl,
    "proj": suite_proj,
    "duality": suite_duality,
    "socle": suite_socle,
    "blocks": suite_blocks,
}


def run_suite(name: str, n: int, window) -> list:
    """Run one suite (or all); returns a list of suite reports."""
    if name == "all":
        return [fn(n, window) for fn in SUITES.values()]
    if name not in SUITES:
        raise ValueError("unknown suite %r" % (name,))
    return [SUITES[name](n, window)]


def report_failures(reports) -> list:
    out = []
    for rep in reports:
        for check in rep["checks"]:
            if check["failures"]:
                out.append({"suite": rep["suite"],
                            "relation": check["relation"],
                            "failures": check["failures"][:10]})
    return out
