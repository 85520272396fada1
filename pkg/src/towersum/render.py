"""Text and JSON rendering of witnesses, reports and scan results.

JSON objects keep a fixed key order.  ``r``, ``m0``, ``period`` and ``m``
are always decimal strings; any other integer of 2**63 or more is also
emitted as a string.
"""
from __future__ import annotations

import json
from typing import Any

from .mersenne import MersenneChain, Theorem2Witness
from .theorem1 import Inapplicability, VerificationReport, Witness

_INT64 = 1 << 63


def _num(x: int) -> int | str:
    return x if -_INT64 <= x < _INT64 else str(x)


def witness_payload(w: Witness | Theorem2Witness) -> dict[str, Any]:
    N = w.N
    if isinstance(w, Theorem2Witness):
        kl, kb, d = w.kl % N, w.kb % N, 1
    else:
        kl, kb, d = w.kl_res.value, w.kb_res.value, w.d
    return {
        "N": _num(N),
        "s": _num(w.s),
        "a": _num(w.a),
        "l": w.l,
        "b": _num(w.b),
        "kl_mod_N": _num(kl),
        "kb_mod_N": _num(kb),
        "d": _num(d),
        "r": str(w.r),
        "m0": str(w.m0),
        "period": str(w.period),
    }


def inapplicability_payload(x: Inapplicability) -> dict[str, Any]:
    return {"N": _num(x.N), "reason": x.reason.value, "detail": x.detail}


def result_payload(x: Witness | Theorem2Witness | Inapplicability) -> dict[str, Any]:
    if isinstance(x, Inapplicability):
        return inapplicability_payload(x)
    return witness_payload(x)


def report_payload(report: VerificationReport) -> dict[str, Any]:
    return {
        "checks": [
            {
                "n": c.n,
                "m": str(c.m),
                "residue": _num(c.residue.value),
                "pass": c.passed,
                "method": c.method,
            }
            for c in report.checks
        ]
    }


def scan_payload(results) -> dict[str, Any]:
    return {"results": [result_payload(x) for _, x in results]}


def chain_payload(chain: MersenneChain) -> dict[str, Any]:
    return {
        "q": chain.q,
        "p": chain.p,
        "N": _num(chain.N),
        "p_prime": chain.p_prime,
        "N_prime": chain.N_prime,
    }


def to_json(payload: dict[str, Any]) -> str:
    return json.dumps(payload, ensure_ascii=True, separators=(",", ":"))


# -- text ---------------------------------------------------------------

def witness_text(w: Witness | Theorem2Witness) -> str:
    p = witness_payload(w)
    N, a, l, r = w.N, w.a, w.l, w.r
    return "\n".join(
        [
            f"N = {N}: s = {w.s}, a = {a}, l = {l}, b = {w.b}",
            f"kl = {p['kl_mod_N']} (mod {N}), kb = {p['kb_mod_N']} (mod {N}), d = {p['d']}",
            f"r = {r}",
            f"m = l + r*a + i*N*a = {l} + {r}*{a} + i*{N}*{a} = {w.m0} + {w.period}*i",
            f"N | I(n, m) for every n that is a positive multiple of {a}",
        ]
    )


def inapplicability_text(x: Inapplicability) -> str:
    return f"N = {x.N}: not applicable ({x.reason.value}): {x.detail}"


def result_text(x) -> str:
    if isinstance(x, Inapplicability):
        return inapplicability_text(x)
    return witness_text(x)


def report_text(report: VerificationReport) -> str:
    lines = [
        f"n = {c.n:>4}  m = {c.m}  residue = {c.residue.value}  "
        f"{'PASS' if c.passed else 'FAIL'}  [{c.method}]"
        for c in report.checks
    ]
    lines.append(f"{len(report.checks) - len(report.failures)}/{len(report.checks)} checks passed")
    return "\n".join(lines)


def scan_text(results) -> str:
    lines = []
    for N, x in results:
        if isinstance(x, Inapplicability):
            lines.append(f"{N:>7}  -  {x.reason.value}")
        else:
            lines.append(f"{N:>7}  s={x.s} a={x.a} r={x.r} m = {x.m0} + {x.period}*i")
    return "\n".join(lines)


def render(obj, mode: str = "text") -> str:
    """Render a witness, inapplicability, report or scan result list."""
    if isinstance(obj, VerificationReport):
        payload, text = report_payload, report_text
    elif isinstance(obj, list):
        payload, text = scan_payload, scan_text
    else:
        payload, text = result_payload, result_text
    if mode == "json":
        return to_json(payload(obj))
    return text(obj)
