"""Checkers for the (3,3) relation and its companion identities.

Every identity is checked by building both sides as tensors, factor by
factor in the printed operator order, and comparing entrywise over the
union of supports.  Nothing is simplified by hand: the checkers are
transcriptions, so a transcription bug cannot cancel against itself.

Checkers in here:

* verify_p33: the hexagon-shaped relation with three solution tensors
  on each side, as maps V^3 -> V^6;
* verify_pentagon: S12 S13 S23 = S23 S12 on V^3;
* verify_yb_family: the family reformulation (pinned-slot operators
  X^i, Y^j, Z^k) - two pentagon-shaped family identities and a
  Yang-Baxter identity per index triple;
* verify_psym: the four kernel-transformed tensors agree pairwise;
* verify_theorem: for the bicharacter solution over a finite abelian
  group, the four proof-case integrals all reproduce the conjugate
  tensor; kernel transforms are expanded as explicit weighted sums,
  independently of apply_kernel;
* dense_p33_oracle: a dense numpy cross-check of verify_p33 that
  enumerates the full index grid with einsum;
* verify_set_p33: the set-theoretic composite maps compared pointwise
  in exact rational arithmetic.

The exact backend is the default for domains of size at most 4 (and
all plain basis domains); larger groups fall back to floats at 1e-9
relative tolerance.
"""

from __future__ import annotations

import itertools
import os
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .groups import FinAbGroup
from .scalars import Comparison
from .solutions import SolutionSpec, q_from_bicharacter, set_q, symmetry_kernels
from .tensors import (
    DOWN,
    UP,
    BasisDomain,
    EqualityReport,
    GroupTensor,
    LinMap,
    apply_kernel,
    contract,
    identity_kernel,
    tensor_equal,
    _format_elem,
)


@dataclass
class VerifyReport:
    """Outcome of one relation check, with a deterministic witness."""

    name: str
    target: str
    backend: str
    verdict: str  # "pass" | "fail" | "indeterminate"
    checks: int = 0
    witness: str = ""
    extras: dict = field(default_factory=dict)

    def __bool__(self):
        return self.verdict == "pass"

    def lines(self):
        out = [
            f"relation={self.name}",
            f"target={self.target}",
            f"backend={self.backend}",
            f"verdict={self.verdict}",
            f"checks={self.checks}",
        ]
        if self.witness:
            out.append(f"witness={self.witness}")
        for key in sorted(self.extras):
            out.append(f"{key}={self.extras[key]}")
        return out


_VERDICTS = {
    Comparison.EQUAL: "pass",
    Comparison.UNEQUAL: "fail",
    Comparison.INDETERMINATE: "indeterminate",
}


def _fmt_key(key) -> str:
    return ",".join(_format_elem(e) for e in key)


def _resolve_backend(domain, backend: str) -> str:
    if backend == "auto":
        if isinstance(domain, BasisDomain) or domain.size <= 4:
            return "exact"
        return "float"
    if backend not in ("exact", "float"):
        raise ValueError(f"unknown backend {backend!r}")
    return backend


def q_as_linmap(q: GroupTensor) -> LinMap:
    """Read the 5-slot solution tensor as a map V^2 -> V^3."""
    if q.arity != 5 or q.variances != (UP, DOWN, UP, DOWN, UP):
        raise ValueError(
            "expected a 5-slot tensor with variance pattern (up,down,up,down,up)"
        )
    return LinMap(q.permute([0, 2, 4, 1, 3]), 3, 2)


def p33_sides(q: GroupTensor) -> tuple[LinMap, LinMap]:
    """Both sides of the (3,3) relation as maps V^3 -> V^6.

    lhs = (Q sigma (x) id^3)(id (x) Q (x) id)(sigma (x) id^2)(id (x) Q)
    rhs = (id^2 (x) sigma (x) id^2)(id^3 (x) Q sigma)(id (x) Q (x) id)
          (id^2 (x) sigma)(Q (x) id)
    """
    dom, exact = q.domain, q.exact
    qm = q_as_linmap(q)
    id1 = LinMap.identity(dom, 1, exact)
    id2 = id1.tens(id1)
    id3 = id2.tens(id1)
    sig = LinMap.sigma(dom, exact)
    qsig = qm.compose(sig)
    lhs = (
        qsig.tens(id3)
        .compose(id1.tens(qm).tens(id1))
        .compose(sig.tens(id2))
        .compose(id1.tens(qm))
    )
    rhs = (
        id2.tens(sig).tens(id2)
        .compose(id3.tens(qsig))
        .compose(id1.tens(qm).tens(id1))
        .compose(id2.tens(sig))
        .compose(qm.tens(id1))
    )
    return lhs, rhs


def verify_p33(sol: SolutionSpec, backend: str = "auto", rel: float = 1e-9) -> VerifyReport:
    if sol.q is None:
        raise ValueError(
            "this solution has no tensor; use verify_set_p33 for the set-theoretic map"
        )
    bk = _resolve_backend(sol.q.domain, backend)
    q = sol.q if bk == "exact" else sol.q.to_float()
    lhs, rhs = p33_sides(q)
    rep = lhs.equal(rhs, rel)
    extras = {"lhs_nnz": len(lhs.tensor.entries), "rhs_nnz": len(rhs.tensor.entries)}
    if rep.witness is not None:
        extras["lhs_value"] = rep.lhs_value
        extras["rhs_value"] = rep.rhs_value
    return VerifyReport(
        name="p33",
        target=sol.descriptor,
        backend=bk,
        verdict=_VERDICTS[rep.verdict],
        checks=rep.compared,
        witness=_fmt_key(rep.witness) if rep.witness is not None else "",
        extras=extras,
    )


def verify_pentagon(s, backend: str = "auto", rel: float = 1e-9) -> VerifyReport:
    """S12 S13 S23 = S23 S12 for a square map S on V (x) V."""
    if isinstance(s, GroupTensor):
        if s.arity != 4 or s.variances != (UP, UP, DOWN, DOWN):
            raise ValueError("pentagon input must be a 2-in/2-out tensor")
        s = LinMap(s, 2, 2)
    if (s.n_out, s.n_in) != (2, 2):
        raise ValueError("pentagon input must be a square map on two wires")
    dom = s.tensor.domain
    bk = _resolve_backend(dom, backend)
    if bk == "float" and s.tensor.exact:
        s = LinMap(s.tensor.to_float(), 2, 2)
    exact = s.tensor.exact
    id1 = LinMap.identity(dom, 1, exact)
    sig = LinMap.sigma(dom, exact)
    idsig = id1.tens(sig)
    s12 = s.tens(id1)
    s23 = id1.tens(s)
    s13 = idsig.compose(s.tens(id1)).compose(idsig)
    lhs = s12.compose(s13).compose(s23)
    rhs = s23.compose(s12)
    rep = lhs.equal(rhs, rel)
    return VerifyReport(
        name="pentagon",
        target=dom.literal,
        backend=bk,
        verdict=_VERDICTS[rep.verdict],
        checks=rep.compared,
        witness=_fmt_key(rep.witness) if rep.witness is not None else "",
    )


def build_families(sol, backend: str = "exact") -> dict:
    """Pin one output slot of Q each way: X^a (slot 0), Y^a (slot 2), Z^a (slot 4).

    Each member is a map on V (x) V; pinning leaves four slots which are
    reordered into the (outs, ins) layout.
    """
    q = sol.q if isinstance(sol, SolutionSpec) else sol
    if q.arity != 5 or q.variances != (UP, DOWN, UP, DOWN, UP):
        raise ValueError("family construction needs the 5-slot solution tensor")
    if backend == "float" and q.exact:
        q = q.to_float()
    fams = {}
    for name, slot, perm in [("X", 0, [1, 3, 0, 2]), ("Y", 2, [0, 3, 1, 2]), ("Z", 4, [0, 2, 1, 3])]:
        fams[name] = {
            a: LinMap(q.pin(slot, a).permute(perm), 2, 2) for a in q.domain.elements()
        }
    return fams


def _linmap_sum(domain, exact, n_out, n_in, terms, extra_weight) -> LinMap:
    """Weighted sum of equally shaped maps, scaled by extra_weight."""
    acc = {}
    for coeff, lm in terms:
        if not coeff:
            continue
        for key, val in lm.tensor.entries.items():
            prod = coeff * val
            prev = acc.get(key)
            acc[key] = prod if prev is None else prev + prod
    entries = {k: extra_weight * v for k, v in acc.items()}
    tensor = GroupTensor(domain, (UP,) * n_out + (DOWN,) * n_in, entries, exact)
    return LinMap(tensor, n_out, n_in)


def verify_yb_family(sol: SolutionSpec, backend: str = "auto", rel: float = 1e-9) -> VerifyReport:
    """The three family identities, checked for every index triple.

    pe1:  sum_{s,t} Q^{i,l,m}_{s,t} X^s_12 X^t_23 = X^m_23 X^l_13 X^i_12
    pe2:  Z^m_12 Z^n_13 Z^k_23 = sum_{s,t} Q^{m,n,k}_{s,t} Z^t_23 Z^s_12
    ybe:  X^i_12 Y^j_13 Z^k_23 = Z^k_23 Y^j_13 X^i_12

    Family sums carry one measure weight c per summed index, which keeps
    both sides of each identity at the same overall weight.
    """
    if sol.q is None:
        raise ValueError("the family reformulation needs a solution tensor")
    dom = sol.q.domain
    bk = _resolve_backend(dom, backend)
    q = sol.q if bk == "exact" else sol.q.to_float()
    exact = q.exact
    fams = build_families(q)
    id1 = LinMap.identity(dom, 1, exact)
    sig = LinMap.sigma(dom, exact)
    idsig = id1.tens(sig)

    def e12(m):
        return m.tens(id1)

    def e23(m):
        return id1.tens(m)

    def e13(m):
        return idsig.compose(m.tens(id1)).compose(idsig)

    elems = list(dom.elements())
    x12 = {a: e12(fams["X"][a]) for a in elems}
    x23 = {a: e23(fams["X"][a]) for a in elems}
    x13 = {a: e13(fams["X"][a]) for a in elems}
    y13 = {a: e13(fams["Y"][a]) for a in elems}
    z12 = {a: e12(fams["Z"][a]) for a in elems}
    z23 = {a: e23(fams["Z"][a]) for a in elems}
    z13 = {a: e13(fams["Z"][a]) for a in elems}
    if exact:
        c2 = dom.ring.radical(-2)
    else:
        c2 = complex(dom.size**-1.0)

    checks = 0
    indeterminate = ""
    counts = {"pe1": 0, "pe2": 0, "ybe": 0}
    for rel_name, a, b, cc in itertools.product(["pe1", "pe2", "ybe"], elems, elems, elems):
        if rel_name == "pe1":
            i, l, m = a, b, cc
            lhs = _linmap_sum(
                dom,
                exact,
                3,
                3,
                [
                    (q.entry((i, s, l, t, m)), x12[s].compose(x23[t]))
                    for s in elems
                    for t in elems
                ],
                c2,
            )
            rhs = x23[m].compose(x13[l]).compose(x12[i])
        elif rel_name == "pe2":
            m, n, k = a, b, cc
            lhs = z12[m].compose(z13[n]).compose(z23[k])
            rhs = _linmap_sum(
                dom,
                exact,
                3,
                3,
                [
                    (q.entry((m, s, n, t, k)), z23[t].compose(z12[s]))
                    for s in elems
                    for t in elems
                ],
                c2,
            )
        else:
            i, j, k = a, b, cc
            lhs = x12[i].compose(y13[j]).compose(z23[k])
            rhs = z23[k].compose(y13[j]).compose(x12[i])
        rep = lhs.equal(rhs, rel)
        checks += rep.compared
        counts[rel_name] += 1
        where = f"{rel_name}[{_fmt_key((a, b, cc))}]"
        if rep.verdict is Comparison.UNEQUAL:
            return VerifyReport(
                name="yb-family",
                target=sol.descriptor,
                backend=bk,
                verdict="fail",
                checks=checks,
                witness=f"{where} at {_fmt_key(rep.witness)}",
                extras={"lhs_value": rep.lhs_value, "rhs_value": rep.rhs_value},
            )
        if rep.verdict is Comparison.INDETERMINATE and not indeterminate:
            indeterminate = f"{where} at {_fmt_key(rep.witness)}"
    return VerifyReport(
        name="yb-family",
        target=sol.descriptor,
        backend=bk,
        verdict="indeterminate" if indeterminate else "pass",
        checks=checks,
        witness=indeterminate,
        extras={f"{k}_triples": v for k, v in counts.items()},
    )


# -- the symmetry relation and the theorem ------------------------------------


def _conj_table(kernel: GroupTensor) -> GroupTensor:
    """Entrywise conjugate, keeping the slot layout (a table, not a dual)."""
    return GroupTensor(
        kernel.domain,
        kernel.variances,
        {k: kernel._conj_val(v) for k, v in kernel.entries.items()},
        kernel.exact,
    )


def _validate_kernel(name: str, kernel: GroupTensor, domain) -> str:
    """Empty string when usable; otherwise a failure description."""
    if kernel.arity != 2:
        raise ValueError(f"kernel {name} must have exactly two slots")
    if kernel.domain != domain:
        raise ValueError(f"kernel {name} lives on {kernel.domain!r}, not {domain!r}")
    sym = tensor_equal(kernel, kernel.permute([1, 0]))
    if sym.verdict is not Comparison.EQUAL:
        return f"kernel {name} is not symmetric at {_fmt_key(sym.witness)}"
    inv = tensor_equal(
        contract(kernel, 1, _conj_table(kernel), 0),
        identity_kernel(kernel.domain, kernel.exact),
    )
    if inv.verdict is not Comparison.EQUAL:
        return f"kernel {name} is not inverted by its conjugate (checked at {_fmt_key(inv.witness)})"
    return ""


def verify_psym(q: GroupTensor, L: GroupTensor, M: GroupTensor, R: GroupTensor, rel: float = 1e-9) -> VerifyReport:
    """Pairwise equality of the four kernel-transformed tensors.

    expr1 = (sigma (x) L (x) L^-1 (x) L) Q        swap slots 0,1; kernels on 2,3,4
    expr2 = (L (x) sigma (x) M^-1 (x) M) Q        swap slots 1,2; kernels on 0,3,4
    expr3 = (M (x) M^-1 (x) sigma (x) R) Q        swap slots 2,3; kernels on 0,1,4
    expr4 = (R (x) R^-1 (x) R (x) sigma) Q        swap slots 3,4; kernels on 0,1,2

    Inverse kernels are taken to be the conjugate tables; each kernel is
    required to be symmetric and inverted by its conjugate, and a kernel
    failing that requirement yields a fail verdict rather than an error.
    """
    if q.arity != 5:
        raise ValueError("the symmetry relation needs a 5-slot tensor")
    dom = q.domain
    backend = "exact" if q.exact else "float"
    for name, kernel in [("L", L), ("M", M), ("R", R)]:
        problem = _validate_kernel(name, kernel, dom)
        if problem:
            return VerifyReport(
                name="psym",
                target=dom.literal,
                backend=backend,
                verdict="fail",
                witness=problem,
            )
    linv, minv, rinv = _conj_table(L), _conj_table(M), _conj_table(R)

    def transform(swap_perm, kernel_at):
        t = q
        for slot, kernel in kernel_at.items():
            t = apply_kernel(t, slot, kernel, side="left")
        return t.permute(swap_perm)

    exprs = [
        transform([1, 0, 2, 3, 4], {2: L, 3: linv, 4: L}),
        transform([0, 2, 1, 3, 4], {0: L, 3: minv, 4: M}),
        transform([0, 1, 3, 2, 4], {0: M, 1: minv, 4: R}),
        transform([0, 1, 2, 4, 3], {0: R, 1: rinv, 2: R}),
    ]
    checks = 0
    indeterminate = ""
    for idx in (1, 2, 3):
        rep = tensor_equal(exprs[0], exprs[idx], rel)
        checks += rep.compared
        where = f"expr1 vs expr{idx + 1}"
        if rep.verdict is Comparison.UNEQUAL:
            return VerifyReport(
                name="psym",
                target=dom.literal,
                backend=backend,
                verdict="fail",
                checks=checks,
                witness=f"{where} at {_fmt_key(rep.witness)}",
                extras={"lhs_value": rep.lhs_value, "rhs_value": rep.rhs_value},
            )
        if rep.verdict is Comparison.INDETERMINATE and not indeterminate:
            indeterminate = f"{where} at {_fmt_key(rep.witness)}"
    return VerifyReport(
        name="psym",
        target=dom.literal,
        backend=backend,
        verdict="indeterminate" if indeterminate else "pass",
        checks=checks,
        witness=indeterminate,
    )


_PROOF_CASES = {
    # one entry per argument position of the solution tensor, read off the
    # four displayed proof integrals; ("ker", free_slot, kernel_name) means
    # the position is integrated against that kernel row indexed by the
    # free slot, ("free", free_slot) means the position carries that free
    # argument directly.
    "case1": [("free", 1), ("free", 0), ("ker", 2, "T"), ("ker", 3, "Tbar"), ("ker", 4, "T")],
    "case2": [("ker", 0, "T"), ("free", 2), ("free", 1), ("ker", 3, "Sbar"), ("ker", 4, "S")],
    "case3": [("ker", 0, "S"), ("ker", 1, "Sbar"), ("free", 3), ("free", 2), ("ker", 4, "T")],
    "case4": [("ker", 0, "T"), ("ker", 1, "Tbar"), ("ker", 2, "T"), ("free", 4), ("free", 3)],
}


def _proof_integral(dt: GroupTensor, plan, kernels: dict) -> GroupTensor:
    """Expand one proof-case integral as an explicit weighted sum.

    Three argument positions are integrated against kernel rows, with one
    measure weight per integration; this is written directly on the entry
    dicts, independent of apply_kernel, so the theorem check exercises a
    second code path.  The plan records each position's free slot, so the
    result already carries its slots in free-argument order.
    """
    rows = {}
    for kname in ("T", "Tbar", "S", "Sbar"):
        by_col = {}
        for (row, col), val in kernels[kname].entries.items():
            by_col.setdefault(col, []).append((row, val))
        rows[kname] = by_col
    acc = {}
    for key, val in dt.entries.items():
        options = []
        for pos, item in enumerate(plan):
            if item[0] == "free":
                options.append([(item[1], key[pos], None)])
            else:
                _, free_slot, kname = item
                options.append(
                    [(free_slot, row, kval) for row, kval in rows[kname].get(key[pos], [])]
                )
        for combo in itertools.product(*options):
            out_key = [None] * 5
            term = val
            for free_slot, elem, kval in combo:
                out_key[free_slot] = elem
                if kval is not None:
                    term = kval * term
            out_key = tuple(out_key)
            prev = acc.get(out_key)
            acc[out_key] = term if prev is None else prev + term
    weight = dt.domain.ring.radical(-3)
    return GroupTensor(
        dt.domain, dt.variances, {k: weight * v for k, v in acc.items()}, dt.exact
    )


def verify_theorem(group: FinAbGroup, chi=None, gauss=None) -> VerifyReport:
    """All four proof-case integrals reproduce the conjugate solution tensor.

    Optional chi/gauss overrides swap in alternative pairing data; they
    exist so negative controls (a trivial gauss function, an asymmetric
    pairing) can demonstrate that the identities genuinely constrain the
    data rather than holding formally.
    """
    sol = q_from_bicharacter(group, chi=chi)
    kern = symmetry_kernels(group, gauss=gauss)
    kernels = {"T": kern["T"], "Tbar": kern["Tinv"], "S": kern["S"], "Sbar": kern["Sinv"]}
    dt = sol.q
    target = dt.conj()
    checks = 0
    extras = {}
    witness = ""
    verdict = "pass"
    for case in ("case1", "case2", "case3", "case4"):
        transformed = _proof_integral(dt, _PROOF_CASES[case], kernels)
        rep = tensor_equal(transformed, target)
        checks += rep.compared
        extras[case] = _VERDICTS[rep.verdict]
        if rep.verdict is not Comparison.EQUAL and verdict == "pass":
            verdict = _VERDICTS[rep.verdict]
            witness = f"{case} at {_fmt_key(rep.witness)}"
            extras["lhs_value"] = rep.lhs_value
            extras["rhs_value"] = rep.rhs_value
    return VerifyReport(
        name="theorem",
        target=group.literal,
        backend="exact",
        verdict=verdict,
        checks=checks,
        witness=witness,
        extras=extras,
    )


# -- independent dense oracle --------------------------------------------------


def dense_p33_oracle(sol_or_q, tol: float = 1e-9, workers: int | None = None) -> VerifyReport:
    """Brute-force dense check of the (3,3) relation with numpy.

    The full 9-index boundary grid is enumerated (N^9 comparisons, N^3
    summed states each) via einsum on a dense complex array, sidestepping
    the sparse machinery entirely.  The grid is split along the first
    output axis into chunks processed by PACHNER_WORKERS threads; chunk
    findings merge deterministically (least index wins).
    """
    q = sol_or_q.q if isinstance(sol_or_q, SolutionSpec) else sol_or_q
    if q is None or q.arity != 5:
        raise ValueError("dense oracle needs the 5-slot solution tensor")
    target = sol_or_q.descriptor if isinstance(sol_or_q, SolutionSpec) else q.domain.literal
    if workers is None:
        workers = int(os.environ.get("PACHNER_WORKERS", "1") or 1)
    workers = max(1, workers)
    elems = list(q.domain.elements())
    n = len(elems)
    index = {e: i for i, e in enumerate(elems)}
    arr = np.zeros((n,) * 5, dtype=complex)
    for key, val in q.to_float().entries.items():
        arr[tuple(index[e] for e in key)] = val

    bounds = sorted({round(k * n / min(workers, n)) for k in range(min(workers, n) + 1)})
    chunks = [(bounds[i], bounds[i + 1]) for i in range(len(bounds) - 1) if bounds[i] < bounds[i + 1]]

    def scan(chunk):
        lo, hi = chunk
        lhs = np.einsum("isltm,spjun,tqurk->ilmjnkpqr", arr[lo:hi], arr, arr, optimize=False)
        rhs = np.einsum("msntk,lujrt,ipuqs->ilmjnkpqr", arr, arr, arr[lo:hi], optimize=False)
        bad = np.argwhere(~np.isclose(lhs, rhs, rtol=tol, atol=tol))
        if len(bad) == 0:
            return None
        first = tuple(int(v) for v in bad[0])
        shown = (first[0] + lo,) + first[1:]
        return shown, (lhs[first], rhs[first])

    if len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            findings = [f for f in pool.map(scan, chunks) if f is not None]
    else:
        findings = [f for f in map(scan, chunks) if f is not None]

    if findings:
        findings.sort(key=lambda f: f[0])
        idx, (lv, rv) = findings[0]
        witness = _fmt_key(tuple(elems[i] for i in idx))
        return VerifyReport(
            name="p33-dense",
            target=target,
            backend="dense",
            verdict="fail",
            checks=n**9,
            witness=witness,
            extras={"lhs_value": format(lv, ".12g"), "rhs_value": format(rv, ".12g"), "workers": workers},
        )
    return VerifyReport(
        name="p33-dense",
        target=target,
        backend="dense",
        verdict="pass",
        checks=n**9,
        extras={"workers": workers},
    )


# -- set-theoretic composite maps ----------------------------------------------


def set_p33_sides(a: Fraction, b: Fraction, c: Fraction):
    """Both composite maps of the relation applied to one rational triple.

    Coordinate swaps play the sigma factors; each Q factor replaces two
    adjacent coordinates by three, in the same printed order as the
    tensor transcription in p33_sides.
    """
    t = (a,) + set_q(b, c)
    t = (t[1], t[0]) + t[2:]
    t = (t[0],) + set_q(t[1], t[2]) + (t[3],)
    lhs = set_q(t[1], t[0]) + t[2:]

    t = set_q(a, b) + (c,)
    t = t[:2] + (t[3], t[2])
    t = (t[0],) + set_q(t[1], t[2]) + (t[3],)
    t = t[:3] + set_q(t[4], t[3])
    rhs = t[:2] + (t[3], t[2]) + t[4:]
    return lhs, rhs


def verify_set_p33(samples: int = 1000, seed: int = 1) -> VerifyReport:
    """Compare the two composite maps at seeded rational points."""
    rng = random.Random(seed)
    for k in range(samples):
        coords = []
        for _ in range(3):
            denom = rng.randrange(2, 1000)
            coords.append(Fraction(rng.randrange(1, denom), denom))
        a, b, c = coords
        lhs, rhs = set_p33_sides(a, b, c)
        if lhs != rhs:
            return VerifyReport(
                name="p33",
                target="set",
                backend="rational",
                verdict="fail",
                checks=k + 1,
                witness=f"inputs ({a},{b},{c})",
                extras={"lhs_value": str(lhs), "rhs_value": str(rhs)},
            )
        for out in lhs + rhs:
            if not (0 < out < 1):
                return VerifyReport(
                    name="p33",
                    target="set",
                    backend="rational",
                    verdict="fail",
                    checks=k + 1,
                    witness=f"output {out} outside (0,1) at inputs ({a},{b},{c})",
                )
    return VerifyReport(
        name="p33",
        target="set",
        backend="rational",
        verdict="pass",
        checks=samples,
        extras={"seed": seed},
    )
