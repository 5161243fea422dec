"""Command-line front end: analysis bundles, polygon SVG, HN runs,
model verifications, and the property-suite runner.

Exit codes: 0 success, 1 rejected input or failed verification suite,
2 internal invariant breach.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction

from . import canonical_tower as tower
from . import group_models as gm
from . import hn_engine as hn
from . import lt_crystals as lt
from . import period_calculus as pc
from . import polygons as pg
from . import signature_core as sc
from .errors import InternalInvariantBreach, MufiltError
from .serialize import (
    desc_json,
    dump_json,
    frac_json,
    monomial_json,
    parse_frac,
    parse_lattice,
    parse_signature,
    polygon_json,
    relaxed_literal,
    signature_json,
)
from .svg import render_polygons


# === report assembly ========================================================

def hasse_values(sig: sc.Signature, raw: str | None) -> tuple[str, tuple[Fraction, ...]]:
    """Read --ha: a scalar applies to whichever embedding is under report,
    a map literal gives one valuation per embedding."""
    if raw is None:
        return "scalar", (Fraction(0),) * sig.f
    text = raw.strip()
    if text.startswith("{"):
        data = relaxed_literal(text)
        vals = [Fraction(0)] * sig.f
        for key, value in data.items():
            t = int(key)
            if not 0 <= t < sig.f:
                raise MufiltError(f"ha map key {t} out of range 0..{sig.f - 1}")
            vals[t] = parse_frac(value)
        return "map", tuple(vals)
    v = parse_frac(text)
    return "scalar", (v,) * sig.f


def _threshold_entries(sig, taus, n, human):
    out = []
    for t in taus:
        if sig.q[t] in (0, sig.h):
            out.append({"tau": t, "degenerate": True})
            continue
        for m in range(1, n + 1):
            out.append(
                {
                    "tau": t,
                    "n": m,
                    "value": frac_json(sc.hasse_threshold(sig, t, m), human),
                    "h3": frac_json(sc.threshold_h3(sig, t, m), human),
                }
            )
        out[-1]["h1"] = frac_json(sc.threshold_h1(sig, t), human)
        out[-1]["existence"] = frac_json(sc.threshold_existence(sig, t), human)
    return out


def _certificates(sig, n, human):
    steps = gm.mu_ord_canonical_filtration(sig, n)
    crans = []
    for members, desc in steps:
        rep = members[0]
        entry = {
            "tau_class": list(members),
            "o_height": desc.o_height,
            "deg": [frac_json(d, human) for d in desc.deg],
        }
        for mode_name, w in (
            ("classical", hn.classical_weighting(sig.p, sig.f)),
            ("tau_mode", hn.tau_weighting(sig.p, sig.f, rep)),
        ):
            cert = hn.break_certificate(sig, n, w, rep, desc)
            entry[mode_name] = {
                "break": cert.break_ok,
                "cran": cert.cran_ok,
                "weighted_degree": frac_json(cert.weighted_degree, human),
                "break_bound": frac_json(cert.break_bound, human),
                "cran_bound": frac_json(cert.cran_bound, human),
            }
        crans.append(entry)
    nested = []
    for i in range(len(steps) - 1):
        inner = steps[i][1]
        outer = steps[i + 1][1]
        fires = hn.bijakowski_containment(
            sig,
            n,
            inner.o_height,
            outer.o_height,
            inner.total_degree,
            outer.total_degree,
        )
        nested.append(
            {
                "inner_height": inner.o_height,
                "outer_height": outer.o_height,
                "fires": fires,
            }
        )
    return {"crans": crans, "bijakowski": nested}


def build_report_bundle(
    sig: sc.Signature,
    ha_kind: str,
    ha_vals: tuple[Fraction, ...],
    n: int,
    tau: int | None = None,
    human: bool = False,
) -> dict:
    consts = sc.constants(sig)
    ok, diags = sc.prime_admissible(sig)
    taus = [tau] if tau is not None else list(range(sig.f))
    bundle = {
        "signature": signature_json(sig),
        "constants": {
            "k": list(consts.k),
            "K": [frac_json(x, human) for x in consts.K],
            "r": list(consts.r),
            "n_class": list(consts.n),
            "k_dual": list(consts.k_dual),
        },
        "prime_admissible": {"ok": ok, "diagnostics": diags},
        "mu_ordinary_factors": [
            {"A": sorted(A), "mult": m}
            for A, m in sc.mu_ordinary_decomposition(sig)
        ],
        "hasse_input": {
            "kind": ha_kind,
            "values": [frac_json(v, human) for v in ha_vals],
            "mu_ha": frac_json(
                sum(ha_vals, Fraction(0))
                if ha_kind == "map"
                else ha_vals[0],
                human,
            ),
        },
        "thresholds": _threshold_entries(sig, taus, n, human),
        "polygons": {
            "hodge": polygon_json(pg.hodge_polygon(sig), human),
            "reversed_hodge": polygon_json(pg.reversed_hodge(sig), human),
            "hn_tau": [
                {
                    "tau": t,
                    "polygon": polygon_json(pg.hn_mu_ordinary_tau(sig, t), human),
                }
                for t in taus
            ],
        },
        "towers": [],
        "ptorsion": [],
        "duality": [],
        "certificates": _certificates(sig, n, human),
    }
    for t in taus:
        ha_t = ha_vals[t]
        report = tower.tower_report(sig, t, ha_t, n)
        bundle["towers"].append(
            {
                "tau": t,
                "ha": frac_json(ha_t, human),
                "levels": [
                    {
                        "level": lv.level,
                        "deg_dual_tau": frac_json(lv.deg_dual_tau, human),
                        "ha_quotient": frac_json(lv.ha_quotient, human),
                        "deg_lower_bound": frac_json(lv.deg_lower_bound, human),
                        "classical_lower_bound": frac_json(
                            lv.classical_lower_bound, human
                        ),
                        "hypotheses": dict(lv.hypotheses),
                    }
                    for lv in report.levels
                ],
            }
        )
        if sig.q[t] in (0, sig.h):
            bundle["ptorsion"].append({"tau": t, "degenerate": True})
            bundle["duality"].append({"tau": t, "degenerate": True})
            continue
        rep = tower.ptorsion_report(sig, t, ha_t)
        bundle["ptorsion"].append(
            {
                "tau": t,
                "deg_identity_rhs": frac_json(rep.deg_identity_rhs, human),
                "coker_degree": frac_json(rep.coker_degree, human),
                "eps_tau": frac_json(rep.eps_tau, human),
                "slot_lower_bounds": [
                    frac_json(b, human) for b in rep.slot_lower_bounds
                ],
                "dual_deg_upper_bound": frac_json(rep.dual_deg_upper_bound, human),
                "classical_lower_bound": frac_json(rep.classical_lower_bound, human),
                "h1_ok": rep.h1_ok,
            }
        )
        try:
            dual = tower.duality_bookkeeping(sig, t, ha_t)
            bundle["duality"].append(
                {
                    "tau": t,
                    "chain": [frac_json(x, human) for x in dual.chain],
                    "perp_deg_lower_bound": frac_json(
                        dual.perp_deg_lower_bound, human
                    ),
                    "consistent": dual.consistent,
                }
            )
        except MufiltError as exc:
            bundle["duality"].append({"tau": t, "skipped": str(exc)})
    return bundle


def hn_result_json(result: hn.HNResult, human: bool = False) -> dict:
    return {
        "polygon": polygon_json(result.polygon, human),
        "filtration": [desc_json(d, human) for d in result.filtration],
        "slopes": [frac_json(s, human) for s in result.slopes],
    }


# === verification suites ====================================================

def _all_sigs(fmax, hmax, primes):
    from itertools import product as iproduct

    for f in range(1, fmax + 1):
        for h in range(1, hmax + 1):
            for p in primes:
                for q in iproduct(range(h + 1), repeat=f):
                    yield sc.Signature(f=f, p=p, h=h, q=tuple(q))


def _primes_upto(bound):
    sieve = [True] * (bound + 1)
    sieve[0:2] = [False, False]
    for i in range(2, int(bound**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = [False] * len(sieve[i * i :: i])
    return [i for i, ok in enumerate(sieve) if ok]


def _suite_constants():
    sig = sc.Signature(f=2, p=7, h=3, q=(1, 2))
    consts = sc.constants(sig)
    checks = [
        consts.k == (0, 1),
        consts.K == (Fraction(0), Fraction(7, 48)),
        consts.r == (1, 2),
        sc.hasse_threshold(sig, 1, 1) == Fraction(23, 48),
        sc.hasse_threshold(sig, 1, 2) == Fraction(23, 2352),
    ]
    grid_ok = True
    for s in _all_sigs(3, 3, (2, 5)):
        c = sc.constants(s)
        qmin = min(s.q)
        for t in range(s.f):
            if s.q[t] == qmin and c.k[t] != 0:
                grid_ok = False
            if s.q[t] <= s.p - 2 and not 0 <= c.K[t] < 1:
                grid_ok = False
        order = sorted(range(s.f), key=lambda t: s.q[t])
        rs = [c.r[t] for t in order]
        if rs != sorted(rs):
            grid_ok = False
    return {"ok": all(checks) and grid_ok, "reference_checks": all(checks)}


def _mu_ord_hn(sig, n, mode, tau=None):
    G = gm.mu_ordinary_product(sig, n)
    nodes = gm.enumerate_split_subgroups(G)
    if mode == "classical":
        w = hn.classical_weighting(sig.p, sig.f)
    else:
        w = hn.tau_weighting(sig.p, sig.f, tau)
    return hn.hn_from_lattice(nodes, w)


def _suite_hn(fmax=2, hmax=3, nmax=2, primes=(2, 3, 5, 7)):
    failures = []
    count = 0
    for sig in _all_sigs(fmax, hmax, primes):
        for n in range(1, nmax + 1):
            count += 1
            classical = _mu_ord_hn(sig, n, "classical")
            target = pg.reversed_hodge(sig)
            got = pg.renormalize(classical.polygon, n)
            if got != target:
                failures.append((signature_json(sig), n, "classical-polygon"))
                continue
            for t in range(sig.f):
                res = _mu_ord_hn(sig, n, "tau", t)
                if res.filtration != classical.filtration:
                    failures.append((signature_json(sig), n, t, "filtration"))
                    break
                mu_poly = pg.hn_mu_ordinary_tau(sig, t)
                scaled = pg.renormalize(res.polygon, n)
                for x, y in scaled.points:
                    if y != sig.f * mu_poly.value(x):
                        failures.append((signature_json(sig), n, t, "break-values"))
                        break
    return {"ok": not failures, "cases": count, "failures": failures[:5]}


def _suite_raynaud(per_combo=200, fmax=4, primes=(2, 3, 5, 7), seed=20260818):
    rng = random.Random(seed)
    cases = 0
    for f in range(1, fmax + 1):
        for p in primes:
            for _ in range(per_combo):
                vd = tuple(
                    Fraction(rng.randrange(0, 33), 32) for _ in range(f)
                )
                d = gm.RaynaudDatum(f=f, p=p, vdelta=vd)
                desc = gm.raynaud_degrees(d)
                dual = gm.raynaud_degrees(gm.raynaud_dual(d))
                if tuple(dual.deg) != tuple(1 - x for x in desc.deg):
                    return {"ok": False, "failed": [f, p, [str(v) for v in vd]]}
                for t in range(f):
                    gm.raynaud_hodge_tate_coker_degree(d, t)
                cases += 1
    return {"ok": True, "cases": cases}


def _suite_periods(seed=20260818):
    for f in range(1, 9):
        for p in _primes_upto(97):
            if not pc.t_decomposition_check(f, p):
                return {"ok": False, "failed": ["t-check", f, p]}
    for sig in _all_sigs(4, 4, (2, 3, 5, 7, 11, 13)):
        consts = sc.constants(sig)
        for t in range(sig.f):
            if sig.q[t] in (0, sig.h):
                continue
            m = pc.multiplication_map(sig, t)
            if m.K_value != consts.K[t] or not m.transport_ok:
                return {"ok": False, "failed": ["K-match", signature_json(sig), t]}
    rng = random.Random(seed)
    done = 0
    while done < 50:
        f = rng.randrange(1, 7)
        h = rng.randrange(1, 7)
        p = rng.choice((2, 3, 5, 7, 11, 13, 17, 19, 23))
        q = tuple(rng.randrange(0, h + 1) for _ in range(f))
        sig = sc.Signature(f=f, p=p, h=h, q=q)
        taus = [t for t in range(f) if sig.q[t] not in (0, sig.h)]
        if not taus:
            continue
        if not pc.multiplication_map(sig, rng.choice(taus)).transport_ok:
            return {"ok": False, "failed": ["transport", signature_json(sig)]}
        done += 1
    return {"ok": True}


def _suite_lts(fmax=5, primes=(2, 3, 5, 7)):
    from itertools import combinations

    cases = 0
    for f in range(1, fmax + 1):
        for p in primes:
            for size in range(f):
                for S in combinations(range(f), size):
                    Sset = frozenset(S)
                    for tau0 in range(f):
                        if tau0 in Sset:
                            continue
                        m = lt.LTSModel(f=f, p=p, S=Sset, tau0=tau0)
                        check = lt.verify_phi_eq_p(m)
                        if not (check.eigen_ok and check.fil_pattern_ok):
                            return {
                                "ok": False,
                                "failed": [f, p, sorted(Sset), tau0],
                            }
                        if lt.solution_count_mod_p(m) != p**f:
                            return {
                                "ok": False,
                                "failed": [f, p, sorted(Sset), tau0, "count"],
                            }
                        cases += 1
    return {"ok": True, "cases": cases}


def _suite_tower(fmax=3, hmax=4):
    ha = Fraction(1, 100)
    for sig in _all_sigs(fmax, hmax, (7,)):
        in_window = sig.p**sig.f * ha + ha < 1
        for t in range(sig.f):
            if sig.q[t] in (0, sig.h):
                continue
            if in_window and tower.hasse_recursion(sig, t, ha, ha) != tower.worst_case(
                sig, ha
            ):
                return {"ok": False, "failed": ["worst-case", signature_json(sig), t]}
            rep = tower.tower_report(sig, t, ha, 2)
            for lv in rep.levels:
                if lv.ha_quotient > sig.p ** (lv.level * sig.f) * ha:
                    return {"ok": False, "failed": ["quotient", signature_json(sig), t]}
            break
    for sig in _all_sigs(fmax, hmax, (2, 3, 5, 7)):
        steps = gm.mu_ord_canonical_filtration(sig, 1)
        for members, desc in steps:
            rep_t = members[0]
            if sig.q[rep_t] in (0, sig.h):
                continue
            w = hn.tau_weighting(sig.p, sig.f, rep_t)
            lhs = tower.ptorsion_report(sig, rep_t, Fraction(0)).deg_identity_rhs
            if lhs != hn.deg_weighted(desc, w):
                return {"ok": False, "failed": ["ptorsion", signature_json(sig), rep_t]}
    return {"ok": True}


def _suite_deformation(fmax=3, hmax=3, nmax=2):
    for sig in _all_sigs(fmax, hmax, (2, 3, 5, 7)):
        for n in range(1, nmax + 1):
            check = tower.frobenius_deformation_check(sig, n)
            if not (check.heights_match and check.subgroup_match):
                return {"ok": False, "failed": [signature_json(sig), n]}
    return {"ok": True}


def _suite_appendix():
    displayed_failures = []
    other_failures = []
    for p in _primes_upto(97):
        for n in range(1, 9):
            for f in range(1, 9):
                detail = tower.appendix_lemma_detail(p, n, f)
                if not detail.displayed_ok:
                    displayed_failures.append([p, n, f])
                if not (detail.reduced_ok and detail.anchor_ok):
                    other_failures.append([p, n, f])
    nested_ok = True
    false_positive = []
    for sig in _all_sigs(2, 3, (2, 7)):
        for n in (1, 2):
            steps = gm.mu_ord_canonical_filtration(sig, n)
            for i in range(len(steps) - 1):
                d1 = steps[i][1]
                d2 = steps[i + 1][1]
                if d1.o_height == 0:
                    continue
                if not hn.bijakowski_containment(
                    sig, n, d1.o_height, d2.o_height,
                    d1.total_degree, d2.total_degree,
                ):
                    nested_ok = False
            nodes = gm.enumerate_split_subgroups(gm.mu_ordinary_product(sig, n))
            for a in nodes:
                for b in nodes:
                    if a.o_height == 0 or a.o_height > b.o_height:
                        continue
                    if b.contains(a):
                        continue
                    if hn.bijakowski_containment(
                        sig, n, a.o_height, b.o_height,
                        a.total_degree, b.total_degree,
                    ):
                        false_positive.append(signature_json(sig))
    ok = (
        not displayed_failures
        and not other_failures
        and nested_ok
        and not false_positive
    )
    return {
        "ok": ok,
        "displayed_failures": displayed_failures,
        "reduced_or_anchor_failures": other_failures,
        "nested_certificates_ok": nested_ok,
        "false_positives": false_positive[:5],
    }


SUITES = {
    "constants": _suite_constants,
    "hn": _suite_hn,
    "raynaud": _suite_raynaud,
    "periods": _suite_periods,
    "lts": _suite_lts,
    "tower": _suite_tower,
    "deformation": _suite_deformation,
    "appendix": _suite_appendix,
}


# === argument parsing and dispatch ==========================================

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MufiltError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="mufilt", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sig(p):
        p.add_argument("--sig", help="signature literal {f,p,h,q:[...]}")

    pa = sub.add_parser("analyze", help="full signature report bundle")
    add_sig(pa)
    pa.add_argument("--ha", help="Hasse valuation: scalar a/b or map {tau:a/b}")
    pa.add_argument("--n", type=int, default=1, help="tower depth")
    pa.add_argument("--tau", type=int, help="restrict to one embedding")
    pa.add_argument("--human", action="store_true")
    pa.add_argument("--json", action="store_true", help="(default)")

    pp = sub.add_parser("polygons", help="hodge, reversed hodge, tau profiles")
    add_sig(pp)
    pp.add_argument("--tau", type=int)
    pp.add_argument("--svg", help="write an SVG overlay to this path (- for stdout)")
    pp.add_argument("--human", action="store_true")
    pp.add_argument("--json", action="store_true")

    ph = sub.add_parser("hn", help="Harder-Narasimhan run on a lattice")
    add_sig(ph)
    ph.add_argument("--lattice", help="lattice JSON file path")
    ph.add_argument("--n", type=int, default=1)
    ph.add_argument("--mode", choices=("classical", "tau"), default="classical")
    ph.add_argument("--tau", type=int)
    ph.add_argument("--p", type=int, help="prime for tau weights on lattice input")
    ph.add_argument("--human", action="store_true")

    pr = sub.add_parser("raynaud", help="Raynaud scheme degrees and cokernel")
    pr.add_argument("--datum", required=True, help="literal {f,p,vdelta:[...]}")
    pr.add_argument("--human", action="store_true")

    pe = sub.add_parser("periods", help="period multiplication map report")
    add_sig(pe)
    pe.add_argument("--tau", type=int)
    pe.add_argument("--human", action="store_true")

    pl = sub.add_parser("lts", help="LT_S crystal report")
    pl.add_argument("--model", required=True, help="literal {f,p,S:[...],tau0}")
    pl.add_argument("--human", action="store_true")

    pv = sub.add_parser("verify", help="run property suites")
    pv.add_argument("--suite", default="all", help="suite name or 'all'")
    return parser


def _cmd_analyze(args) -> int:
    if not args.sig:
        raise MufiltError("--sig is required")
    sig = parse_signature(args.sig)
    if args.tau is not None:
        sig.check_embedding(args.tau)
    kind, vals = hasse_values(sig, args.ha)
    if args.n < 1:
        raise MufiltError(f"--n must be >= 1, got {args.n}")
    bundle = build_report_bundle(
        sig, kind, vals, args.n, tau=args.tau, human=args.human
    )
    sys.stdout.write(dump_json(bundle))
    return 0


def _cmd_polygons(args) -> int:
    if not args.sig:
        raise MufiltError("--sig is required")
    sig = parse_signature(args.sig)
    taus = [args.tau] if args.tau is not None else list(range(sig.f))
    for t in taus:
        sig.check_embedding(t)
    items = [
        (pg.hodge_polygon(sig), "hodge"),
        (pg.reversed_hodge(sig), "reversed hodge"),
    ]
    for t in taus:
        items.append((pg.hn_mu_ordinary_tau(sig, t), f"tau profile {t}"))
    if args.svg:
        doc = render_polygons(items, title=f"signature {args.sig}")
        if args.svg == "-":
            sys.stdout.write(doc)
        else:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(doc)
        return 0
    out = {
        "signature": signature_json(sig),
        "hodge": polygon_json(items[0][0], args.human),
        "reversed_hodge": polygon_json(items[1][0], args.human),
        "hn_tau": [
            {"tau": t, "polygon": polygon_json(poly, args.human)}
            for t, (poly, _) in zip(taus, items[2:])
        ],
    }
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_hn(args) -> int:
    if args.lattice and args.sig:
        raise MufiltError("pass either --sig or --lattice, not both")
    if args.mode == "tau" and args.tau is None:
        raise MufiltError("--mode tau needs --tau")
    if args.sig:
        sig = parse_signature(args.sig)
        if args.n < 1:
            raise MufiltError(f"--n must be >= 1, got {args.n}")
        nodes = gm.enumerate_split_subgroups(
            gm.mu_ordinary_product(sig, args.n)
        )
        pairs = None
        f, p = sig.f, sig.p
    elif args.lattice:
        with open(args.lattice, "r", encoding="utf-8") as fh:
            nodes, pairs = parse_lattice(fh.read())
        if not nodes:
            raise MufiltError("lattice file holds no nodes")
        f = nodes[0].f
        p = args.p if args.p else 2
        if args.mode == "tau" and not args.p:
            raise MufiltError("--mode tau on a lattice file needs --p")
    else:
        raise MufiltError("pass --sig or --lattice")
    if args.mode == "classical":
        w = hn.classical_weighting(p, f)
    else:
        w = hn.tau_weighting(p, f, args.tau)
    result = hn.hn_from_lattice(nodes, w, containment=pairs)
    out = {
        "mode": args.mode,
        "tau": args.tau,
        "nodes": len(nodes),
        "result": hn_result_json(result, args.human),
    }
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_raynaud(args) -> int:
    data = relaxed_literal(args.datum)
    try:
        f = int(data["f"])
        p = int(data["p"])
        vdelta = tuple(parse_frac(v) for v in data["vdelta"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MufiltError(f"datum needs f, p, vdelta: {exc}")
    d = gm.RaynaudDatum(f=f, p=p, vdelta=vdelta)
    desc = gm.raynaud_degrees(d)
    out = {
        "datum": {
            "f": f,
            "p": p,
            "vdelta": [frac_json(v, args.human) for v in d.vdelta],
        },
        "degrees": desc_json(desc, args.human),
        "hodge_tate_coker": [
            frac_json(gm.raynaud_hodge_tate_coker_degree(d, t), args.human)
            for t in range(f)
        ],
        "dual_vdelta": [
            frac_json(v, args.human) for v in gm.raynaud_dual(d).vdelta
        ],
    }
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_periods(args) -> int:
    if not args.sig:
        raise MufiltError("--sig is required")
    sig = parse_signature(args.sig)
    taus = [args.tau] if args.tau is not None else list(range(sig.f))
    entries = []
    for t in taus:
        sig.check_embedding(t)
        if sig.q[t] in (0, sig.h):
            entries.append({"tau": t, "degenerate": True})
            continue
        m = pc.multiplication_map(sig, t)
        margin = pc.faltings_margin(sig, t)
        entries.append(
            {
                "tau": t,
                "coeffs": [monomial_json(c) for c in m.coeffs.entries],
                "K_value": frac_json(m.K_value, args.human),
                "transport_ok": m.transport_ok,
                "d_matrix": list(pc.d_matrix(sig, t)),
                "faltings_margin": frac_json(margin.value, args.human),
                "margin_ok": margin.margin_ok,
                "mod_fil1_valuation": frac_json(
                    pc.mod_fil1_valuation(sig, t), args.human
                ),
                "mod_p_filp_valuation": frac_json(
                    pc.mod_p_filp_valuation(sig, t), args.human
                ),
            }
        )
    out = {
        "signature": signature_json(sig),
        "t_decomposition_ok": pc.t_decomposition_check(sig.f, sig.p),
        "maps": entries,
    }
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_lts(args) -> int:
    data = relaxed_literal(args.model)
    try:
        model = lt.LTSModel(
            f=int(data["f"]),
            p=int(data["p"]),
            S=frozenset(int(x) for x in data["S"]),
            tau0=int(data["tau0"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise MufiltError(f"model needs f, p, S, tau0: {exc}")
    gen = lt.tate_generator(model)
    check = lt.verify_phi_eq_p(model)
    out = {
        "model": {
            "f": model.f,
            "p": model.p,
            "S": sorted(model.S),
            "tau0": model.tau0,
        },
        "frobenius_exponents": list(lt.frobenius_matrix(model)),
        "generator": [monomial_json(g) for g in gen.entries],
        "generator_valuation": frac_json(
            lt.generator_valuation(model), args.human
        ),
        "eigen_ok": check.eigen_ok,
        "fil_pattern_ok": check.fil_pattern_ok,
        "solution_count_mod_p": lt.solution_count_mod_p(model),
        "d_s_exponents": list(lt.d_s_matrix(model)),
    }
    sys.stdout.write(dump_json(out))
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "all":
        names = list(SUITES)
    elif args.suite in SUITES:
        names = [args.suite]
    else:
        raise MufiltError(
            f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)} or all"
        )
    results = {}
    ok = True
    for name in names:
        results[name] = SUITES[name]()
        ok = ok and results[name]["ok"]
    sys.stdout.write(dump_json({"ok": ok, "suites": results}))
    return 0 if ok else 1


_COMMANDS = {
    "analyze": _cmd_analyze,
    "polygons": _cmd_polygons,
    "hn": _cmd_hn,
    "raynaud": _cmd_raynaud,
    "periods": _cmd_periods,
    "lts": _cmd_lts,
    "verify": _cmd_verify,
}


def run_command(argv) -> int:
    """Parse argv and run one subcommand; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except MufiltError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except InternalInvariantBreach as exc:
        sys.stderr.write(f"internal invariant breach: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
