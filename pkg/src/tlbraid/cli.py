"""Command-line surface: verify / generate / apply / entropy.

Angles accept plain floats or simple pi expressions ("pi/8", "-pi/6",
"3*pi/4").  States are given as bit strings ("0101") or "@file" references
to the JSON interchange format.  Flags override values from --config FILE
(a JSON object with the same key names).  Exit codes: 0 all checks passed,
1 a verification check failed, 2 usage/config/domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass, fields
from typing import Optional

import numpy as np

from . import verify as verify_mod
from .braidrep import bell_representation, jones_representation
from .entangle import entanglement_report, measure_qubit
from .errors import DomainError, TLBraidError
from .linalg import num_qubits, state_from_json, state_to_json
from .states import (apply_structured, basis_state, cluster_like_state,
                     ghz_state, index_to_bits, parse_bits, structured_braid_op)
from .tla import (RepShape, TLParams, default_involution_spec, involution_spec,
                  tl_params)
from . import braidlang

_ANGLE_RE = re.compile(r"^[0-9pi+\-*/. ()]+$")


def parse_angle(text: str) -> float:
    """Float literal or a simple arithmetic expression over pi."""
    try:
        return float(text)
    except ValueError:
        pass
    if not _ANGLE_RE.match(text):
        raise DomainError(f"cannot parse angle {text!r}")
    try:
        return float(eval(text, {"__builtins__": {}}, {"pi": math.pi}))
    except Exception:
        raise DomainError(f"cannot parse angle {text!r}") from None


@dataclass
class RunConfig:
    """Effective run parameters; None means 'not set, use the default'."""

    theta: Optional[float] = None
    phi: Optional[float] = None
    n: Optional[int] = None
    k: Optional[int] = None
    s: Optional[list[str]] = None
    a_sign: int = 1
    b_sign: int = 1
    tol: Optional[float] = None
    seed: int = 0
    format: str = "text"
    out: Optional[str] = None

    def params(self) -> TLParams:
        """TLParams with defaults theta=pi/8, phi=0; validates the domain."""
        return tl_params(
            math.pi / 8 if self.theta is None else self.theta,
            0.0 if self.phi is None else self.phi,
            self.a_sign, self.b_sign,
        )

    def spec_for(self, shape: RepShape):
        if self.s is None:
            return default_involution_spec(shape)
        if len(self.s) != shape.n - 1:
            raise DomainError(
                f"--s needs {shape.n - 1} involutions for n={shape.n}, "
                f"got {len(self.s)}"
            )
        return involution_spec(self.s)


def _load_config(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    if getattr(args, "config", None):
        file_values = _load_config(args.config)
        valid = {f.name for f in fields(RunConfig)}
        unknown = set(file_values) - valid
        if unknown:
            raise DomainError(f"unknown config keys: {sorted(unknown)}")
        for key, value in file_values.items():
            if key in ("theta", "phi") and isinstance(value, str):
                value = parse_angle(value)
            if key == "s" and isinstance(value, str):
                value = [p.strip() for p in value.split(",")]
            setattr(cfg, key, value)
    for key in ("theta", "phi", "n", "k", "s", "a_sign", "b_sign",
                "tol", "seed", "format", "out"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    cfg.params()    # reject out-of-domain theta at load time
    return cfg


def format_complex(z: complex) -> str:
    return f"{z.real:.12g}{z.imag:+.12g}i"


def _state_text(v: np.ndarray) -> str:
    n = num_qubits(v)
    lines = [f"# {n}-qubit state, nonzero amplitudes:"]
    for idx in range(v.size):
        if abs(v[idx]) > 1e-14:
            bits = "".join(str(b) for b in index_to_bits(idx, n))
            lines.append(f"|{bits}>  {format_complex(v[idx])}")
    return "\n".join(lines)


def _report_text(name: str, report) -> str:
    lines = [f"[{name}] {'PASS' if report.passed else 'FAIL'}"
             + (f"  ({report.note})" if report.note else "")]
    for c in report.checks:
        extra = f" x{c.instances}" if c.instances != 1 else ""
        lines.append(
            f"  {'ok ' if c.passed else 'FAIL'} {c.name:<28} "
            f"max residual {c.residual:.3e}{extra}"
        )
        if not c.passed and c.worst_at:
            lines.append(f"       worst at {c.worst_at}")
    return "\n".join(lines)


def _entanglement_text(reports) -> str:
    lines = ["# entanglement reports (keep-subset cuts):"]
    for r in reports:
        cut = ",".join(str(q) for q in r.bipartition)
        lines.append(
            f"  cut {{{cut}}}: entropy {r.entropy_bits:.12g} bits, "
            f"schmidt rank {r.schmidt_rank}, "
            f"{'product' if r.is_product else 'entangled'}"
        )
    return "\n".join(lines)


def _emit(payload: dict, text: str, cfg: RunConfig) -> None:
    body = json.dumps(payload, indent=2) if cfg.format == "json" else text
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)


def _load_state(cfg: RunConfig, spec: str) -> np.ndarray:
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            return state_from_json(json.load(fh))
    return basis_state(parse_bits(spec))


def _cut_reports(v: np.ndarray, k: Optional[int], tol: float):
    """The {1..k-1} vs {k..n} cut (when k > 1) plus all single-qubit cuts."""
    n = num_qubits(v)
    reports = []
    if k is not None and 1 < k <= n and n > 1:
        reports.append(entanglement_report(v, range(1, k), tol=tol))
    if n > 1:
        for q in range(1, n + 1):
            reports.append(entanglement_report(v, [q], tol=tol))
    return reports


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    grid_kwargs = {}
    if cfg.theta is not None:
        grid_kwargs["thetas"] = (cfg.theta,)
    if cfg.phi is not None:
        grid_kwargs["phis"] = (cfg.phi,)
    if cfg.n is not None:
        grid_kwargs["ns"] = (cfg.n,)
    if cfg.k is not None:
        grid_kwargs["ks"] = (cfg.k,)
    if cfg.s is not None:
        grid_kwargs["involutions"] = tuple(cfg.s)
    reports = verify_mod.run_suite(suite, tol=cfg.tol, **grid_kwargs)
    failures = [
        dict(suite=name, **c.to_json())
        for name, rep in reports.items() for c in rep.failures()
    ]
    payload = {
        "suite": suite,
        "reports": {name: rep.to_json() for name, rep in reports.items()},
        "pass": not failures,
        "failures": failures,
    }
    text = "\n".join(_report_text(name, rep) for name, rep in reports.items())
    _emit(payload, text, cfg)
    return 0 if not failures else 1


def cmd_generate(cfg: RunConfig, kind: str, state: Optional[str],
                 inverse: bool) -> int:
    params = cfg.params()
    tol = cfg.tol if cfg.tol is not None else 1e-9
    if kind == "ghz":
        if cfg.n is None:
            raise DomainError("generate ghz needs --n")
        v = ghz_state(cfg.n, params=params, use_inverse=inverse)
        k = 1
    elif kind == "cluster":
        if cfg.n is None or cfg.k is None:
            raise DomainError("generate cluster needs --n and --k")
        v = cluster_like_state(cfg.n, cfg.k, params=params)
        k = cfg.k
    elif kind == "basis-superpose":
        if state is None:
            raise DomainError("generate basis-superpose needs --state BITS")
        bits = parse_bits(state)
        n = len(bits)
        k = cfg.k if cfg.k is not None else 1
        shape = RepShape(n=n, k=k)
        op = structured_braid_op(shape, params=params, spec=cfg.spec_for(shape))
        v = apply_structured(op, basis_state(bits), inverse=inverse)
    else:
        raise DomainError(f"unknown kind {kind!r}")
    reports = _cut_reports(v, k, tol)
    payload = {
        "kind": kind,
        "state": state_to_json(v),
        "entanglement": [r.to_json() for r in reports],
    }
    text = _state_text(v) + "\n" + _entanglement_text(reports)
    _emit(payload, text, cfg)
    return 0


def cmd_apply(cfg: RunConfig, word_text: str, state: str, rep_name: str) -> int:
    v = _load_state(cfg, state)
    n = num_qubits(v)
    if cfg.n is not None and cfg.n != n:
        raise DomainError(f"--n {cfg.n} disagrees with the {n}-qubit state")
    if rep_name == "jones":
        shape = RepShape(n=n, k=cfg.k if cfg.k is not None else 1)
        rep = jones_representation(cfg.params(), shape, cfg.spec_for(shape))
        word = braidlang.parse(word_text, declared_strands=3)
    elif rep_name == "bell":
        rep = bell_representation(n)
        word = braidlang.parse(word_text, declared_strands=n)
    else:
        raise DomainError(f"unknown representation {rep_name!r}")
    out = braidlang.evaluate_on_state(word, rep, v)
    payload = {"word": braidlang.render(word), "rep": rep_name,
               "state": state_to_json(out)}
    _emit(payload, _state_text(out), cfg)
    return 0


def cmd_entropy(cfg: RunConfig, state: str, cut: Optional[str],
                measure: Optional[int], outcome: int) -> int:
    v = _load_state(cfg, state)
    tol = cfg.tol if cfg.tol is not None else 1e-9
    payload: dict = {}
    if measure is not None:
        prob, v = measure_qubit(v, measure, outcome)
        payload["measurement"] = {
            "qubit": measure, "outcome": outcome, "probability": prob,
        }
    if cut:
        subset = [int(tok) for tok in cut.split(",") if tok.strip()]
        reports = [entanglement_report(v, subset, tol=tol)]
    else:
        n = num_qubits(v)
        reports = (
            [entanglement_report(v, [q], tol=tol) for q in range(1, n + 1)]
            if n > 1 else []
        )
    payload["state"] = state_to_json(v)
    payload["entanglement"] = [r.to_json() for r in reports]
    text = ""
    if measure is not None:
        text += (f"# measured qubit {measure} -> {outcome} "
                 f"with probability {prob:.12g}\n")
    text += _state_text(v) + "\n" + _entanglement_text(reports)
    _emit(payload, text, cfg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--theta", type=parse_angle, default=None,
                        help="braiding angle (default pi/8); accepts pi expressions")
    common.add_argument("--phi", type=parse_angle, default=None,
                        help="phase angle of the flip block (default 0)")
    common.add_argument("--n", type=int, default=None, help="qubit count")
    common.add_argument("--k", type=int, default=None,
                        help="distinguished tensor slot (1-based)")
    common.add_argument("--s", type=lambda t: [p.strip() for p in t.split(",")],
                        default=None,
                        help="comma list of involutions for slots j != k, "
                             "e.g. I,X,X")
    common.add_argument("--a-sign", dest="a_sign", type=int, choices=(1, -1),
                        default=None)
    common.add_argument("--b-sign", dest="b_sign", type=int, choices=(1, -1),
                        default=None)
    common.add_argument("--tol", type=float, default=None,
                        help="override the suite tolerance")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized checks (default 0)")
    common.add_argument("--format", choices=("json", "text"), default=None,
                        help="output format (default text)")
    common.add_argument("--config", default=None,
                        help="JSON config file; flags override it")
    common.add_argument("--out", default=None, help="write output to a file")

    parser = argparse.ArgumentParser(
        prog="tlbraid",
        description="Temperley-Lieb braid representations: verification and "
                    "entangled-state generation",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="run a relation-check suite")
    p_verify.add_argument("suite",
                          choices=("tla", "braid", "ybe", "powers", "cnot", "all"))

    p_gen = sub.add_parser("generate", parents=[common],
                           help="generate GHZ / cluster-like / superposed states")
    p_gen.add_argument("kind", choices=("ghz", "cluster", "basis-superpose"))
    p_gen.add_argument("--state", default=None,
                       help="basis bits for basis-superpose, e.g. 0101")
    p_gen.add_argument("--inverse", action="store_true",
                       help="apply the adjoint operator instead")

    p_apply = sub.add_parser("apply", parents=[common],
                             help="apply a braid word to a state")
    p_apply.add_argument("word", help='braid word, e.g. "b1 b2^-1"')
    p_apply.add_argument("--rep", choices=("jones", "bell"), default="jones")
    p_apply.add_argument("--state", required=True, help="BITS or @state.json")

    p_ent = sub.add_parser("entropy", parents=[common],
                           help="entanglement report, optionally post-measurement")
    p_ent.add_argument("--state", required=True, help="BITS or @state.json")
    p_ent.add_argument("--cut", default=None,
                       help="comma list of qubits to keep, e.g. 2,3")
    p_ent.add_argument("--measure", type=int, default=None,
                       help="measure this qubit before reporting")
    p_ent.add_argument("--outcome", type=int, choices=(0, 1), default=0)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite)
        if args.command == "generate":
            return cmd_generate(cfg, args.kind, args.state, args.inverse)
        if args.command == "apply":
            return cmd_apply(cfg, args.word, args.state, args.rep)
        if args.command == "entropy":
            return cmd_entropy(cfg, args.state, args.cut, args.measure,
                               args.outcome)
        parser.error(f"unknown command {args.command}")
    except (TLBraidError, OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
