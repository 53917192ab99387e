"""Command-line front end.

Subcommands:

* ``gen KIND --n N --seed S``        -- deterministic random documents
* ``op OPERATION [--group TAG] ...`` -- group operations on JSON documents
* ``project LEVEL FRAME``            -- bundle projections
* ``classify FRAME``                 -- strongest frame class
* ``decompose ELEMENT``              -- symmetric-times-skew factorization
* ``oracle {compose,act} ...``       -- jet composition and prolonged action
* ``verify SUITE ...``               -- named property suites; exit code 0
                                        only when every property passed

Documents are read from file paths ("-" for stdin) and written to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Any

from . import randgen as rg
from .errors import (
    GroupMismatchError,
    JetFramesError,
    KindMismatchError,
    ParseError,
)
from .frames import (
    HolFrame,
    NonHolFrame,
    SemiHolFrame,
    classify,
    embed_semihol,
    proj_20,
    proj_21,
    proj_hat22,
    proj_pi,
    proj_tilde22,
)
from .groups import (
    QuotClassHat,
    conj_hat2,
    coset_equal,
    decompose_hat2,
    inv_hat2,
    inv_t1n,
    inv_tilde2,
    inv_tilde21,
    inv_tilde22,
    mu,
    mu_inv,
    mul_hat2,
    mul_g2,
    mul_t1n,
    mul_tilde2,
    mul_tilde21,
    mul_tilde22,
    tau,
    tau_inv,
)
from .jets import compose_2jets, left_act_diffeo
from .serialize import (
    GROUP_TAGS,
    bilinear_to_doc,
    frame_from_doc,
    frame_to_doc,
    group_from_doc,
    group_to_doc,
    jet_from_doc,
    jet_to_doc,
    vector_to_doc,
)
from .suites import ALL_SUITE_NAMES, run_suites

GEN_KINDS = GROUP_TAGS + ("nonhol", "semihol", "hol", "map2jet")

_MULS = {
    "tilde2": mul_tilde2,
    "hat2": mul_hat2,
    "g2": mul_g2,
    "tilde21": mul_tilde21,
    "tilde22": mul_tilde22,
    "t1n": mul_t1n,
}

_INVS = {
    "tilde2": inv_tilde2,
    "hat2": inv_hat2,
    "g2": lambda x: inv_hat2(x.as_hat2()),
    "tilde21": inv_tilde21,
    "tilde22": inv_tilde22,
    "t1n": inv_t1n,
}

_GEN_GROUP = {
    "tilde2": rg.rand_tilde2,
    "hat2": rg.rand_hat2,
    "g2": rg.rand_g2,
    "tilde21": rg.rand_tilde21,
    "tilde22": rg.rand_tilde22,
    "t1n": rg.rand_t1n,
}

_GEN_FRAME = {
    "nonhol": rg.rand_nonhol,
    "semihol": rg.rand_semihol,
    "hol": rg.rand_hol,
}


def _read_doc(path: str) -> Any:
    try:
        text = sys.stdin.read() if path == "-" else open(path).read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}") from exc


def _emit(doc: Any) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _tagged(path: str, tag: str):
    doc = _read_doc(path)
    if isinstance(doc, dict) and doc.get("group") != tag:
        raise GroupMismatchError(
            f"{path}: expected group {tag!r}, found {doc.get('group')!r}")
    return group_from_doc(doc)


def _cmd_gen(args) -> int:
    if args.n < 1:
        raise ParseError("--n must be >= 1")
    rng = rg.stream(args.seed, "gen", args.kind, args.n)
    origin = (Fraction(0),) * args.n
    if args.kind in _GEN_GROUP:
        if args.origin:
            raise ParseError("--origin only applies to frames and jets")
        _emit(group_to_doc(_GEN_GROUP[args.kind](rng, args.n)))
    elif args.kind in _GEN_FRAME:
        frame = _GEN_FRAME[args.kind](rng, args.n)
        if args.origin:
            frame = replace(frame, x=origin)
        _emit(frame_to_doc(frame))
    else:
        jet = rg.rand_map2jet(rng, args.n)
        if args.origin:
            jet = replace(jet, base=origin, value=origin)
        _emit(jet_to_doc(jet))
    return 0


def _cmd_op(args) -> int:
    op = args.operation
    if op == "mul":
        if args.group is None:
            raise GroupMismatchError("op mul requires --group")
        x = _tagged(args.inputs[0], args.group)
        y = _tagged(args.inputs[1], args.group)
        _emit(group_to_doc(_MULS[args.group](x, y)))
    elif op == "inv":
        if args.group is None:
            raise GroupMismatchError("op inv requires --group")
        x = _tagged(args.inputs[0], args.group)
        _emit(group_to_doc(_INVS[args.group](x)))
    elif op == "conj":
        outer = _tagged(args.inputs[0], "hat2")
        inner = _tagged(args.inputs[1], "hat2")
        _emit(group_to_doc(conj_hat2(outer, inner)))
    elif op == "decompose":
        x = _tagged(args.inputs[0], "hat2")
        sym_el, skew = decompose_hat2(x)
        _emit({"g2": group_to_doc(sym_el), "skew": bilinear_to_doc(skew)})
    elif op == "mu":
        x = _tagged(args.inputs[0], "hat2")
        _emit(group_to_doc(mu(QuotClassHat.of(x))))
    elif op == "mu-inv":
        g = _tagged(args.inputs[0], "g2")
        _emit(group_to_doc(mu_inv(g).representative()))
    elif op == "tau":
        x = _tagged(args.inputs[0], "t1n")
        _emit(group_to_doc(tau(x)))
    elif op == "tau-inv":
        y = _tagged(args.inputs[0], "hat2")
        _emit(group_to_doc(tau_inv(y)))
    elif op == "coset-equal":
        x = _tagged(args.inputs[0], "hat2")
        y = _tagged(args.inputs[1], "hat2")
        _emit({"equal": coset_equal(x, y)})
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown operation {op!r}")
    return 0


def _cmd_project(args) -> int:
    frame = frame_from_doc(_read_doc(args.frame))
    level = args.level
    if level == "pi":
        if not isinstance(frame, NonHolFrame):
            raise KindMismatchError("project pi needs a nonhol frame")
        _emit(frame_to_doc(proj_pi(frame)))
    elif level == "hat22":
        if isinstance(frame, HolFrame):
            frame = SemiHolFrame(frame.x, frame.a, frame.f)
        if not isinstance(frame, SemiHolFrame):
            raise KindMismatchError("project hat22 needs a semihol (or hol) frame")
        _emit(frame_to_doc(proj_hat22(frame)))
    elif level == "tilde22":
        if not isinstance(frame, NonHolFrame):
            raise KindMismatchError("project tilde22 needs a nonhol frame")
        _emit(frame_to_doc(proj_tilde22(frame)))
    elif level == "21":
        if not isinstance(frame, (NonHolFrame, SemiHolFrame, HolFrame)):
            raise KindMismatchError("project 21 needs a second-order frame")
        _emit(frame_to_doc(proj_21(frame)))
    elif level == "20":
        _emit({"x": vector_to_doc(proj_20(frame))})
    else:  # pragma: no cover
        raise ParseError(f"unknown level {level!r}")
    return 0


def _cmd_classify(args) -> int:
    frame = frame_from_doc(_read_doc(args.frame))
    if isinstance(frame, SemiHolFrame):
        frame = embed_semihol(frame)
    elif isinstance(frame, HolFrame):
        frame = embed_semihol(SemiHolFrame(frame.x, frame.a, frame.f))
    if not isinstance(frame, NonHolFrame):
        raise KindMismatchError("classify needs a second-order frame")
    _emit({"class": classify(frame)})
    return 0


def _cmd_decompose(args) -> int:
    x = _tagged(args.element, "hat2")
    sym_el, skew = decompose_hat2(x)
    _emit({"g2": group_to_doc(sym_el), "skew": bilinear_to_doc(skew)})
    return 0


def _cmd_oracle(args) -> int:
    if args.oracle_op == "compose":
        outer = jet_from_doc(_read_doc(args.inputs[0]))
        inner = jet_from_doc(_read_doc(args.inputs[1]))
        _emit(jet_to_doc(compose_2jets(outer, inner)))
    else:
        F = jet_from_doc(_read_doc(args.inputs[0]))
        frame = frame_from_doc(_read_doc(args.inputs[1]))
        if isinstance(frame, SemiHolFrame):
            frame = embed_semihol(frame)
        if not isinstance(frame, NonHolFrame):
            raise KindMismatchError("oracle act needs a nonhol or semihol frame")
        _emit(frame_to_doc(left_act_diffeo(F, frame)))
    return 0


def _cmd_verify(args) -> int:
    chosen = args.suite_flag if args.suite_flag is not None else args.suite
    if chosen is None:
        raise ParseError("verify needs a suite name (positional or --suite)")
    names = ALL_SUITE_NAMES if chosen == "all" else (chosen,)
    if args.trials < 1:
        raise ParseError("--trials must be >= 1")
    ns = tuple(args.n) if args.n else (1, 2, 3, 4)
    if any(n < 1 for n in ns):
        raise ParseError("--n must be >= 1")
    reports = run_suites(names, ns, args.trials, args.seed)
    if args.json:
        _emit([r.to_doc() for r in reports])
    else:
        for rep in reports:
            for prop in rep.properties:
                status = "ok  " if prop.passed else "FAIL"
                line = (f"{status} {rep.suite}.{prop.name} "
                        f"[ns={','.join(map(str, rep.ns))} trials={rep.trials} "
                        f"seed={rep.seed}]")
                if not prop.passed:
                    line += (f" failures={prop.failures}/{prop.trials_run}"
                             f" first={json.dumps(prop.counterexample)}")
                print(line)
            print(f"suite {rep.suite}: "
                  f"{'PASS' if rep.passed else 'FAIL'} "
                  f"({rep.wall_time_s:.2f}s)")
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jetframes",
        description="Exact algebra of second-order frame coordinates: "
                    "elements, frames, projections and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a random document")
    p_gen.add_argument("kind", choices=GEN_KINDS)
    p_gen.add_argument("--n", type=int, default=2)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--origin", action="store_true",
                       help="pin base points (and a jet's value) to the "
                            "origin so generated documents compose")
    p_gen.set_defaults(fn=_cmd_gen)

    p_op = sub.add_parser("op", help="apply a group operation")
    p_op.add_argument("operation",
                      choices=("mul", "inv", "conj", "decompose", "mu",
                               "mu-inv", "tau", "tau-inv", "coset-equal"))
    p_op.add_argument("inputs", nargs="+", help="JSON files ('-' for stdin)")
    p_op.add_argument("--group", choices=GROUP_TAGS)
    p_op.set_defaults(fn=_cmd_op)

    p_proj = sub.add_parser("project", help="apply a bundle projection")
    p_proj.add_argument("level", choices=("pi", "hat22", "tilde22", "21", "20"))
    p_proj.add_argument("frame")
    p_proj.set_defaults(fn=_cmd_project)

    p_cls = sub.add_parser("classify", help="strongest class of a frame")
    p_cls.add_argument("frame")
    p_cls.set_defaults(fn=_cmd_classify)

    p_dec = sub.add_parser("decompose",
                           help="factor a pair into symmetric times skew")
    p_dec.add_argument("element")
    p_dec.set_defaults(fn=_cmd_decompose)

    p_oracle = sub.add_parser("oracle", help="jet composition and action")
    p_oracle.add_argument("oracle_op", choices=("compose", "act"))
    p_oracle.add_argument("inputs", nargs=2)
    p_oracle.set_defaults(fn=_cmd_oracle)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", nargs="?",
                          choices=ALL_SUITE_NAMES + ("all",))
    p_verify.add_argument("--suite", dest="suite_flag",
                          choices=ALL_SUITE_NAMES + ("all",),
                          help="suite name (alternative to the positional)")
    p_verify.add_argument("--n", type=int, action="append",
                          help="dimension to test (repeatable; default 1-4)")
    p_verify.add_argument("--trials", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--json", action="store_true",
                          help="machine-readable report")
    p_verify.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except JetFramesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
