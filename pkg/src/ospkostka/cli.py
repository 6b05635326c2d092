"""Command-line front end.

Weight-vector arguments use the syntax "a1,a2;b1,b2": the semicolon
separates the eps block from the delta block (orbit labels read the same
way as lam_s;lam_b).  Values with a leading minus need the
--flag=value form, e.g. --lambda=-1;1.  Output is human-readable text by
default or JSON with --format json.  Exit codes: 0 success,
1 verification failure, 2 usage or parse error.
"""

import argparse
import json
import os
import sys

from . import characters, euler, moment, oddroots, orbits, roots
from .kostka import (
    RootSet,
    kostka as kostka_poly,
    kostka_custom,
    kostka_memo_export,
    kostka_memo_import,
    l_poly,
)

CACHE_VERSION = "ospkostka-cache-1"
CACHE_ENV = "OSP_KOSTKA_CACHE"


class UsageError(ValueError):
    pass


def parse_int_vector(text, what="vector"):
    text = text.strip()
    if text == "":
        return ()
    out = []
    for pos, piece in enumerate(text.split(",")):
        try:
            out.append(int(piece))
        except ValueError:
            raise UsageError(
                f"bad {what} {text!r}: expected an integer at position {pos}, got {piece!r}"
            ) from None
    return tuple(out)


def parse_biweight(text, data=None, what="weight"):
    if ";" not in text:
        raise UsageError(
            f"bad {what} {text!r}: expected 'eps;delta' with comma-separated integers"
        )
    eps_text, _, delta_text = text.partition(";")
    eps = parse_int_vector(eps_text, what=f"{what} eps part")
    delta = parse_int_vector(delta_text, what=f"{what} delta part")
    if data is not None:
        if len(eps) != data.eps_rank:
            raise UsageError(
                f"{what} eps part {eps} has length {len(eps)}, "
                f"N={data.N} needs {data.eps_rank}"
            )
        if len(delta) != data.delta_rank:
            raise UsageError(
                f"{what} delta part {delta} has length {len(delta)}, "
                f"N={data.N} needs {data.delta_rank}"
            )
    return eps, delta


def parse_orbit_label(text, data, what="orbit"):
    if ";" not in text:
        raise UsageError(f"bad {what} {text!r}: expected 'lam_s;lam_b'")
    s_text, _, b_text = text.partition(";")
    label = orbits.OrbitLabel(
        parse_int_vector(s_text, what=f"{what} lam_s"),
        parse_int_vector(b_text, what=f"{what} lam_b"),
    )
    try:
        orbits.validate_label(data, label)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return label


def poly_json(poly):
    return {"coeffs": list(poly.coeffs)}


def char_json(ch):
    return [
        {"weight": list(w), "mult": m} for w, m in sorted(ch.terms.items())
    ]


def emit(payload, fmt, text_renderer):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    return text_renderer(payload)


# ---------------------------------------------------------------- cache

def cache_load(path):
    """Load the polynomial cache; unknown versions and unreadable files
    fall back to a cold run with a warning."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        return {}
    except (OSError, json.JSONDecodeError) as exc:
        print(f"warning: ignoring unreadable cache {path}: {exc}", file=sys.stderr)
        return {}
    if not isinstance(raw, dict) or raw.get("version") != CACHE_VERSION:
        return {}
    entries = raw.get("entries", {})
    return entries if isinstance(entries, dict) else {}


def cache_store(path, entries):
    payload = {"version": CACHE_VERSION, "entries": dict(sorted(entries.items()))}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, sort_keys=True)


def _kostka_key(N, lam0, lam1, mu0, mu1):
    return "|".join(
        [
            str(N),
            "K",
            ",".join(map(str, lam0)),
            ",".join(map(str, lam1)),
            ",".join(map(str, mu0)),
            ",".join(map(str, mu1)),
        ]
    )


def _import_cache_entries(entries):
    imported = {}
    for key, coeffs in entries.items():
        parts = key.split("|")
        if len(parts) != 6 or parts[1] != "K":
            continue
        if not isinstance(coeffs, list) or not all(isinstance(c, int) for c in coeffs):
            continue
        try:
            N = int(parts[0])
            vecs = [
                tuple(int(x) for x in p.split(",")) if p else ()
                for p in parts[2:]
            ]
        except ValueError:
            continue
        imported[(N, *vecs)] = coeffs
    kostka_memo_import(imported)


def _export_cache_entries():
    out = {}
    for (N, lam0, lam1, mu0, mu1), coeffs in kostka_memo_export().items():
        out[_kostka_key(N, lam0, lam1, mu0, mu1)] = list(coeffs)
    return out


# ---------------------------------------------------------------- commands

def cmd_roots(args):
    if args.odd:
        if args.N is None:
            raise UsageError("roots --odd requires -N")
        data = oddroots.osp_root_data(args.N)
        payload = {
            "N": args.N,
            "shuffle": list(oddroots.shuffle(data)),
            "odd_positive_roots": [str(b) for b in oddroots.odd_positive_roots(data)],
            "simple_odd_roots": [str(b) for b in oddroots.simple_odd_roots(data)],
        }

        def render(p):
            lines = [f"N = {p['N']}  shuffle = {tuple(p['shuffle'])}"]
            lines.append("positive odd roots:")
            lines.extend(f"  {r}" for r in p["odd_positive_roots"])
            lines.append("simple odd roots:")
            lines.extend(f"  {r}" for r in p["simple_odd_roots"])
            return "\n".join(lines)

        print(emit(payload, args.format, render))
        return 0
    if args.family is None or args.rank is None:
        raise UsageError("roots requires either --odd with -N, or --family and --rank")
    gtype = roots.GroupType(args.family, args.rank)
    payload = {
        "type": str(gtype),
        "positive_roots": [list(r) for r in roots.positive_roots(gtype)],
        "rho": list(roots.rho(gtype)),
        "weyl_order": roots.weyl_order(gtype),
    }

    def render(p):
        lines = [f"type {p['type']}  |W| = {p['weyl_order']}  rho = {tuple(p['rho'])}"]
        lines.append("positive roots:")
        lines.extend(f"  {tuple(r)}" for r in p["positive_roots"])
        return "\n".join(lines)

    print(emit(payload, args.format, render))
    return 0


def cmd_lpoly(args):
    data = oddroots.osp_root_data(args.N)
    eps, delta = parse_biweight(args.alpha, data, "alpha")
    poly = l_poly(data, oddroots.BiWeight(eps, delta))
    payload = {"poly": poly_json(poly)}
    print(emit(payload, args.format, lambda p: str(poly)))
    return 0


def cmd_kostka(args):
    data = oddroots.osp_root_data(args.N)
    lam = parse_biweight(args.lam, data, "lambda")
    mu = parse_biweight(args.mu, data, "mu")
    try:
        poly = kostka_poly(data, lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"poly": poly_json(poly)}
    print(emit(payload, args.format, lambda p: str(poly)))
    return 0


def cmd_kostka_custom(args):
    root_list = [
        oddroots.BiWeight(*parse_biweight(t, what="root")) for t in args.roots.split()
    ]
    simple_list = [
        oddroots.BiWeight(*parse_biweight(t, what="simple root"))
        for t in args.simple.split()
    ]
    type0 = roots.GroupType(args.family0, args.rank0)
    type1 = roots.GroupType(args.family1, args.rank1)
    rho_pair = (
        parse_int_vector(args.rho0, "rho0") if args.rho0 else roots.rho(type0),
        parse_int_vector(args.rho1, "rho1") if args.rho1 else roots.rho(type1),
    )
    lam = parse_biweight(args.lam, what="lambda")
    mu = parse_biweight(args.mu, what="mu")
    try:
        poly = kostka_custom(
            RootSet(tuple(root_list), args.label),
            simple_list,
            type0,
            type1,
            rho_pair,
            lam,
            mu,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"poly": poly_json(poly)}
    print(emit(payload, args.format, lambda p: str(poly)))
    return 0


def cmd_dominance(args):
    data = oddroots.osp_root_data(args.N)
    lam = parse_biweight(args.lam, data, "lambda")
    mu = parse_biweight(args.mu, data, "mu")
    try:
        ge = oddroots.dominance_ge(data, lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    certificate = None
    if ge:
        diff = oddroots.BiWeight(*lam) - oddroots.BiWeight(*mu)
        coords = oddroots.simple_root_coordinates(data, diff)
        certificate = list(coords) if coords is not None else None
    payload = {"ge": ge, "certificate": certificate}
    print(
        emit(
            payload,
            args.format,
            lambda p: f"ge = {p['ge']}  certificate = {p['certificate']}",
        )
    )
    return 0


def cmd_closure(args):
    data = oddroots.osp_root_data(args.N)
    lower = parse_orbit_label(args.lower, data, "lower")
    upper = parse_orbit_label(args.upper, data, "upper")
    le = orbits.closure_le(data, lower, upper)
    payload = {"le": le}
    print(emit(payload, args.format, lambda p: f"le = {p['le']}"))
    return 0


def cmd_dim(args):
    data = oddroots.osp_root_data(args.N)
    label = parse_orbit_label(args.orbit, data)
    payload = {"dim": orbits.orbit_dim(data, label)}
    print(emit(payload, args.format, lambda p: f"dim = {p['dim']}"))
    return 0


def cmd_stalk(args):
    data = oddroots.osp_root_data(args.N)
    lam = parse_orbit_label(args.lam, data, "lambda orbit")
    mu = parse_orbit_label(args.mu, data, "mu orbit")
    try:
        table = orbits.stalk_poincare(data, lam, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"stalk": [{"degree": d, "dim": m} for d, m in table]}

    def render(p):
        return "\n".join(f"H^{e['degree']}: {e['dim']}" for e in p["stalk"])

    print(emit(payload, args.format, render))
    return 0


def cmd_poset(args):
    data = oddroots.osp_root_data(args.N)
    labels = orbits.orbit_labels_in_box(data, args.box)
    le = {}
    for a in labels:
        for b in labels:
            if a != b and orbits.closure_le(data, a, b):
                le.setdefault(str(a), set()).add(str(b))
    # Hasse edges: covers only
    edges = []
    for a in labels:
        ups = le.get(str(a), set())
        for b in labels:
            if str(b) not in ups:
                continue
            if any(str(b) in le.get(c, set()) for c in ups if c != str(b)):
                continue
            edges.append((str(a), str(b)))
    edges.sort()
    if args.dot:
        lines = ["digraph closure {"]
        for node in sorted(str(l) for l in labels):
            lines.append(f'  "{node}";')
        for a, b in edges:
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        print("\n".join(lines))
        return 0
    payload = {
        "nodes": sorted(str(l) for l in labels),
        "edges": [[a, b] for a, b in edges],
    }

    def render(p):
        lines = [f"{len(p['nodes'])} orbits, {len(p['edges'])} cover relations"]
        lines.extend(f"  {a} < {b}" for a, b in p["edges"])
        return "\n".join(lines)

    print(emit(payload, args.format, render))
    return 0


def cmd_orbit_rep(args):
    data = oddroots.osp_root_data(args.N)
    label = parse_orbit_label(args.orbit, data)
    mu, nu = orbits.embed_signatures(data, label)
    model = orbits.lattice_representative(mu, nu)
    payload = {
        "mu": list(mu.entries),
        "nu": list(nu.entries),
        "inverted": mu.inverted or nu.inverted,
        "generators": [str(r) for r in model.rows],
    }

    def render(p):
        lines = [f"mu = {tuple(p['mu'])}  nu = {tuple(p['nu'])}"]
        lines.extend(f"  {g}" for g in p["generators"])
        return "\n".join(lines)

    print(emit(payload, args.format, render))
    return 0


def cmd_stabilizer(args):
    data = oddroots.osp_root_data(args.N)
    label = parse_orbit_label(args.orbit, data)
    mu, nu = orbits.embed_signatures(data, label)
    stab = orbits.shuffled_alpha_beta(data, mu, nu)
    payload = {
        "alpha": list(stab.alpha),
        "beta": list(stab.beta),
        "n": {str(k): v for k, v in stab.n_mult.items()},
        "m": {str(k): v for k, v in stab.m_mult.items()},
        "reductive": stab.reductive,
    }

    def render(p):
        return (
            f"alpha = {tuple(p['alpha'])}\n"
            f"beta  = {tuple(p['beta'])}\n"
            f"n = {p['n']}\nm = {p['m']}\n"
            f"reductive quotient = {p['reductive']}"
        )

    print(emit(payload, args.format, render))
    return 0


def cmd_char(args):
    gtype = roots.GroupType(args.type, args.rank)
    lam = parse_int_vector(args.lam, "lambda")
    try:
        ch = characters.irreducible_character(gtype, lam)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"dim": ch.dim(), "weights": char_json(ch)}

    def render(p):
        lines = [f"dim = {p['dim']}"]
        lines.extend(f"  {tuple(e['weight'])}: {e['mult']}" for e in p["weights"])
        return "\n".join(lines)

    print(emit(payload, args.format, render))
    return 0


def cmd_verify_bryl(args):
    data = oddroots.osp_root_data(args.N)
    mu = parse_biweight(args.mu, data, "mu")
    try:
        report = euler.verify_bryl(data, mu, args.qmax)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {
        "N": args.N,
        "mu": [list(mu[0]), list(mu[1])],
        "qmax": args.qmax,
        "ok": report.ok,
        "degree_diffs": [char_json(d) for d in report.degree_diffs],
    }

    def render(p):
        status = "ok" if p["ok"] else f"MISMATCH at degrees {report.failing_degrees()}"
        return f"verify-bryl N={p['N']} mu={args.mu} qmax={p['qmax']}: {status}"

    print(emit(payload, args.format, render))
    return 0 if report.ok else 1


def cmd_verify_positivity(args):
    data = oddroots.osp_root_data(args.N)
    pairs = checked = 0
    failures = []
    labels = [
        (lam0, lam1)
        for lam0 in roots.dominant_weights(data.type0, args.box)
        for lam1 in roots.dominant_weights(data.type1, args.box)
    ]
    for lam in labels:
        for mu in labels:
            pairs += 1
            if not oddroots.dominance_ge(data, lam, mu):
                continue
            checked += 1
            poly = kostka_poly(data, lam, mu)
            bad = None
            if any(c < 0 for c in poly.coeffs):
                bad = "negative coefficient"
            elif not poly:
                bad = "vanishes on the dominance cone"
            elif lam != mu and poly[0] != 0:
                bad = "nonzero constant term off the diagonal"
            elif lam == mu and poly.coeffs != (1,):
                bad = "diagonal value is not 1"
            if bad:
                failures.append(
                    {"lambda": [list(lam[0]), list(lam[1])],
                     "mu": [list(mu[0]), list(mu[1])],
                     "reason": bad,
                     "poly": poly_json(poly)}
                )
    payload = {
        "N": args.N,
        "box": args.box,
        "pairs": pairs,
        "comparable": checked,
        "ok": not failures,
        "failures": failures,
    }

    def render(p):
        status = "ok" if p["ok"] else f"{len(p['failures'])} failures"
        return (
            f"verify-positivity N={p['N']} box={p['box']}: "
            f"{p['comparable']} comparable pairs, {status}"
        )

    print(emit(payload, args.format, render))
    return 0 if not failures else 1


def cmd_moment_check(args):
    if args.jobs > 1:
        reports = _parallel_moment(args.N, args.trials, args.seed, args.jobs)
    else:
        reports = [moment.moment_check(args.N, args.trials, args.seed)]
    merged = _merge_moment_reports(args.N, reports)

    def render(p):
        status = "ok" if p["ok"] else f"{p['failures']} failures"
        return (
            f"moment-check N={p['N']} trials={p['trials']} seed={args.seed}: {status}"
        )

    print(emit(merged, args.format, render))
    return 0 if merged["ok"] else 1


def _parallel_moment(N, trials, seed, jobs):
    """Split trials into deterministic per-chunk seeds; the merge is an
    exact counter sum, so the result is independent of the pool size."""
    chunk = (trials + jobs - 1) // jobs
    tasks = []
    start = 0
    idx = 0
    while start < trials:
        tasks.append((N, min(chunk, trials - start), seed + idx))
        start += chunk
        idx += 1
    try:
        import multiprocessing

        with multiprocessing.Pool(min(jobs, len(tasks))) as pool:
            return pool.starmap(moment.moment_check, tasks)
    except (ImportError, OSError):
        return [moment.moment_check(*t) for t in tasks]


def _merge_moment_reports(N, reports):
    # chunked runs do one equivariance spot check each; report the
    # conjunction so the payload is independent of the chunk count
    merged = {
        "N": N,
        "trials": sum(r["trials"] for r in reports),
        "char_identity": sum(r["char_identity"] for r in reports),
        "pfaffian_vanishing": sum(r["pfaffian_vanishing"] for r in reports),
        "fft_generators": sum(r["fft_generators"] for r in reports),
        "equivariance": int(all(r["equivariance"] for r in reports)),
        "failures": sum(r["failures"] for r in reports),
    }
    merged["ok"] = merged["failures"] == 0
    return merged


# ---------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", default=None, help="polynomial cache file")
    common.add_argument(
        "--jobs",
        type=int,
        default=os.cpu_count() or 1,
        help="worker count for trial batches (results are jobs-independent)",
    )
    parser = argparse.ArgumentParser(
        prog="ospkostka",
        description="Exact orthosymplectic Kostka polynomials and orbit tables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("roots", help="positive roots of D/C factors or the odd system")
    p.add_argument("-N", type=int, default=None)
    p.add_argument("--odd", action="store_true")
    p.add_argument("--family", choices=("D", "C"), default=None)
    p.add_argument("--rank", type=int, default=None)
    p.set_defaults(func=cmd_roots)

    p = add_parser("lpoly", help="partition polynomial of a lattice vector")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--alpha", required=True)
    p.set_defaults(func=cmd_lpoly)

    p = add_parser("kostka", help="orthosymplectic Kostka polynomial")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_kostka)

    p = add_parser("kostka-custom", help="Kostka sum for a custom root set")
    p.add_argument("--roots", required=True, help="space-separated eps;delta vectors")
    p.add_argument("--simple", required=True, help="space-separated eps;delta vectors")
    p.add_argument("--family0", choices=("D", "C"), default="D")
    p.add_argument("--rank0", type=int, required=True)
    p.add_argument("--family1", choices=("D", "C"), default="C")
    p.add_argument("--rank1", type=int, required=True)
    p.add_argument("--rho0", default=None)
    p.add_argument("--rho1", default=None)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--label", default="custom")
    p.set_defaults(func=cmd_kostka_custom)

    p = add_parser("dominance", help="dominance order with cone certificate")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_dominance)

    p = add_parser("closure", help="orbit closure order")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--lower", required=True)
    p.add_argument("--upper", required=True)
    p.set_defaults(func=cmd_closure)

    p = add_parser("dim", help="orbit dimension")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--orbit", required=True)
    p.set_defaults(func=cmd_dim)

    p = add_parser("stalk", help="IC stalk Poincare table")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_stalk)

    p = add_parser("poset", help="closure order on a box of orbit labels")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--box", type=int, default=2)
    p.add_argument("--dot", action="store_true", help="emit DOT text")
    p.set_defaults(func=cmd_poset)

    p = add_parser("orbit-rep", help="lattice representative of an orbit")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--orbit", required=True)
    p.set_defaults(func=cmd_orbit_rep)

    p = add_parser("stabilizer", help="stabilizer data of an orbit")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--orbit", required=True)
    p.set_defaults(func=cmd_stabilizer)

    p = add_parser("char", help="irreducible character table")
    p.add_argument("--type", choices=("D", "C"), required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_char)

    p = add_parser("verify-bryl", help="compare the two Euler series")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--qmax", type=int, required=True)
    p.set_defaults(func=cmd_verify_bryl)

    p = add_parser("verify-positivity", help="Kostka positivity on a box")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--box", type=int, default=3)
    p.set_defaults(func=cmd_verify_positivity)

    p = add_parser("moment-check", help="moment map identity trials")
    p.add_argument("-N", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=42)
    p.set_defaults(func=cmd_moment_check)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors already; re-raise unchanged
        raise exc
    cache_path = args.cache or os.environ.get(CACHE_ENV)
    if cache_path:
        _import_cache_entries(cache_load(cache_path))
    try:
        code = args.func(args)
    except ValueError as exc:
        # UsageError and library validation errors (rank guards, bad
        # weights) are both usage problems at this surface
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if cache_path:
        try:
            cache_store(cache_path, _export_cache_entries())
        except OSError as exc:
            print(f"warning: could not write cache {cache_path}: {exc}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
