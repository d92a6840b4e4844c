"""
Command-line interface: ``hecke <subcommand> <config> [args] [options]``.

Element literals are products of factors joined by ``.`` (or ``|``), optionally
wrapped as ``T[...]``.  A factor is a generator label (``s1``, ``s0``,
``s0'``; ``s`` is accepted for ``s1`` in rank one), a translation
``(c1,...,cn;t1,...,tk)`` or ``1``.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .affine import AffineWall, ExtElt
from .config import fixture_names, load_config
from .errors import ConfigError, HeckeError, LiteralError, ValidationFailed
from .hecke import HeckeAlgebra, HeckeElt
from .oracle import run_relation_suite
from .roots import RootSystemError

__all__ = ["main", "parse_element", "parse_translation"]

_TOKEN = re.compile(r"\([^)]*\)|[^.|]+")


def parse_translation(group, text: str) -> tuple:
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise LiteralError(f"translation literal must look like (c1,...;t1,...): {text!r}")
    body = text[1:-1]
    free_s, _, tor_s = body.partition(";")
    try:
        free = [int(x) for x in free_s.split(",") if x.strip()]
        tor = [int(x) for x in tor_s.split(",") if x.strip()]
    except ValueError as exc:
        raise LiteralError(f"bad integer in {text!r}") from exc
    lat = group.lattice
    if len(free) != lat.free_rank:
        raise LiteralError(f"{text!r}: expected {lat.free_rank} free coordinates")
    if not tor:
        tor = [0] * len(lat.torsion_orders)
    if len(tor) != len(lat.torsion_orders):
        raise LiteralError(f"{text!r}: expected {len(lat.torsion_orders)} torsion coordinates")
    return lat.canon(free + tor)


def parse_element(group, text: str) -> ExtElt:
    s = text.strip()
    m = re.fullmatch(r"T~?\[(.*)\]", s)
    if m:
        s = m.group(1).strip()
    if not s:
        raise LiteralError("empty element literal")
    x = group.identity
    for tok in _TOKEN.findall(s):
        tok = tok.strip()
        if not tok or tok == "1":
            continue
        if tok.startswith("("):
            factor = group.translation(parse_translation(group, tok))
        else:
            label = "s1" if tok == "s" and group.rank == 1 else tok
            k = group.label_index.get(label)
            if k is None:
                raise LiteralError(f"unknown generator {tok!r}; known: {', '.join(group.labels)}")
            factor = group.gens[k]
        x = group.mul(x, factor)
    return x


def _load(target: str) -> tuple:
    cfg = load_config(target)
    return cfg, HeckeAlgebra.from_config(cfg)


def _term_json(alg: HeckeAlgebra, h: HeckeElt, normalized: bool) -> list:
    out = []
    for w in h.support():
        c = h.terms[w]
        if normalized:
            c = c.shift(alg.weight(w))
        out.append({"element": alg.group.render(w), "coefficient": c.to_json()})
    return out


def cmd_info(args) -> tuple[int, str, dict]:
    cfg, alg = _load(args.config)
    G = alg.group
    lat = G.lattice
    omega, complete = G.omega_elements()
    data = {
        "name": cfg.name,
        "description": cfg.description,
        "root_system": G.rs.describe_type(),
        "weyl_order": len(G.W),
        "positive_roots": len(G.rs.positive_indices),
        "lattice": {"free_rank": lat.free_rank, "torsion_orders": list(lat.torsion_orders)},
        "generators": [{"label": lab, "weight": alg.params[lab], "element": G.render_translation(g.lam)
                        + ("." + ".".join(G.labels[s] for s in G.W.words[g.u]) if g.u else "")}
                       for lab, g in zip(G.labels, G.gens)],
        "omega_order": len(omega) if complete else None,
        "omega_generators": [{"element": G.render_omega(t), "permutes": G.omega_permutation(t)}
                             for t in G.omega_generators()],
        "families": [],
    }
    named = {tuple(v): k for k, v in cfg.root_labels.items()}
    for a in G.rs.positive_indices:
        root = tuple(G.rs.roots[a])
        fam = {
            "root": list(root),
            "label": named.get(root, ""),
            "transitive": G.hyperplane_family_transitive(a),
            "L(H0)": G.wall_parameter(AffineWall(a, 0), alg.params),
            "L(H1)": G.wall_parameter(AffineWall(a, 1), alg.params),
        }
        data["families"].append(fam)
    lines = [
        f"name: {cfg.name}",
        f"root system: {data['root_system']} ({data['positive_roots']} positive roots), |W| = {len(G.W)}",
        f"translations: Z^{lat.free_rank}" + "".join(f" + Z/{d}" for d in lat.torsion_orders),
        "simple affine reflections:",
    ]
    for g in data["generators"]:
        lines.append(f"  {g['label']:<5} L = {g['weight']}   {g['element']}")
    lines.append(f"length-zero group: order {data['omega_order'] if complete else 'infinite (truncated)'}")
    for og in data["omega_generators"]:
        perm = ", ".join(f"{a}->{b}" for a, b in og["permutes"].items() if a != b) or "trivial on generators"
        lines.append(f"  {og['element']}: {perm}")
    lines.append("wall families (positive roots):")
    for fam in data["families"]:
        name = fam["label"] or str(fam["root"])
        lines.append(f"  family({name}): transitive={'true' if fam['transitive'] else 'false'}, "
                     f"L(H0)={fam['L(H0)']}, L(H1)={fam['L(H1)']}")
    return 0, "\n".join(lines), data


def cmd_mul(args) -> tuple[int, str, dict]:
    _, alg = _load(args.config)
    G = alg.group
    a = parse_element(G, args.a)
    b = parse_element(G, args.b)
    h = alg.t_mul(alg.T(a), alg.T(b))
    text = h.render(args.normalized)
    return 0, text, {"a": G.render(a), "b": G.render(b), "product": _term_json(alg, h, args.normalized),
                     "rendered": text}


def cmd_theta(args) -> tuple[int, str, dict]:
    _, alg = _load(args.config)
    G = alg.group
    lam = parse_translation(G, args.lam)
    h = alg.theta(lam)
    bern = alg.to_bernstein(h)
    t = G.translation(lam)
    support_ok = all(G.bruhat_leq(w, t) and G.omega_part(w) == G.omega_part(t) for w in h.terms)
    lam1, lam2 = G.small_dominant_decompose(lam)
    lines = [
        f"Theta{G.render_translation(lam)} = {h.render(args.normalized)}",
        f"dominant decomposition: {G.render_translation(lam1)} - {G.render_translation(lam2)}",
        f"Bernstein certificate: {bern.render()}",
        f"support below t_lam in Bruhat order: {'yes' if support_ok else 'NO'}",
    ]
    data = {"lam": list(lam), "expansion": _term_json(alg, h, args.normalized),
            "bernstein": [{"lam": list(k[0]), "finite": G.render(G.finite(k[1])), "coefficient": c.to_json()}
                          for k, c in sorted(bern.coeffs.items())],
            "support_below": support_ok}
    return (0 if support_ok else 1), "\n".join(lines), data


def cmd_center(args) -> tuple[int, str, dict]:
    _, alg = _load(args.config)
    G = alg.group
    lam = parse_translation(G, args.lam)
    orbit = G.weyl_orbit(lam)
    z = alg.central_element(orbit)
    witness = alg.central_witness(z)
    dec = alg.center_decompose(z) if witness is None else {}
    round_trip = dec == {orbit: 1}
    orbit_s = "{" + ", ".join(G.render_translation(x) for x in orbit) + "}"
    lines = [
        f"orbit: {orbit_s}",
        f"z = {z.render(args.normalized)}",
        f"central: {'yes' if witness is None else 'NO, fails against ' + witness[0]}",
        "decomposition: " + (" + ".join(f"{c}*z{{{', '.join(G.render_translation(x) for x in o)}}}"
                                         for o, c in dec.items()) or "-"),
        f"round trip: {'ok' if round_trip else 'FAILED'}",
    ]
    data = {"orbit": [list(x) for x in orbit], "expansion": _term_json(alg, z, args.normalized),
            "central": witness is None, "round_trip": round_trip}
    return (0 if round_trip else 1), "\n".join(lines), data


def cmd_verify(args) -> tuple[int, str, dict]:
    cfg, alg = _load(args.config)
    report = run_relation_suite(alg, args.window, args.seed, cfg.name, cfg.root_labels)
    return (0 if report.passed else 1), report.to_table(), report.to_dict()


def cmd_fixtures(args) -> tuple[int, str, dict]:
    names = fixture_names()
    return 0, "\n".join(names), {"fixtures": names}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hecke", description="Exact Iwahori-Hecke algebra computations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--window", type=int, default=6, help="length window for verification (default 6)")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    common.add_argument("--normalized", action="store_true", help="render in the normalized basis T~")
    common.add_argument("--output", choices=["table", "json"], default="table")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common], help="summarize a configuration")
    s.add_argument("config")
    s.set_defaults(func=cmd_info)
    s = sub.add_parser("mul", parents=[common], help="product of two basis elements")
    s.add_argument("config")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_mul)
    s = sub.add_parser("theta", parents=[common], help="Bernstein element of a translation")
    s.add_argument("config")
    s.add_argument("lam")
    s.set_defaults(func=cmd_theta)
    s = sub.add_parser("center", parents=[common], help="orbit sum through a translation")
    s.add_argument("config")
    s.add_argument("lam")
    s.set_defaults(func=cmd_center)
    s = sub.add_parser("verify", parents=[common], help="run the relation suite")
    s.add_argument("config")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("fixtures", parents=[common], help="list shipped fixtures")
    s.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, text, data = args.func(args)
    except (ConfigError, ValidationFailed, RootSystemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except HeckeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.output == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
