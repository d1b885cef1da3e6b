"""Exhaustive checks of the stated identities over small (n, k)."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .. import bijmaps, srgf, typea, typeb
from ..qseries import QPolynomial, q_factorial, stirling_B, stirling_B_ordered_q, stirling_B_q, stirling_q, dualmaj_rec
from .cache import DistributionCache
from .distribution import LIMITS, DistributionKey, check_limit, distribution, enumerate_family
from .oracles import dowling, double_factorial_even

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
INDETERMINATE = "indeterminate"


@dataclass
class ClaimReport:
    claim: str
    range: list[tuple[int, int]]
    verdict: str
    witness: dict | None = None
    ms: float = 0.0
    observed: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "range": [list(nk) for nk in self.range],
            "verdict": self.verdict,
            "witness": self.witness,
            "ms": round(self.ms, 3),
            "observed": self.observed,
        }

    def summary(self) -> str:
        n_max = max((n for n, _ in self.range), default=0)
        head = f"{self.claim}: "
        if self.verdict == VERIFIED:
            return head + f"verified on range n<={n_max} ({len(self.range)} (n,k) instances)"
        if self.verdict == COUNTEREXAMPLE:
            w = self.witness
            where = f"n={w['n']} k={w['k']}"
            part = f" partition {w['partition']}" if w.get("partition") else ""
            return (head + f"counterexample at {where}{part}: {w['quantity']}: "
                    f"lhs={w['lhs']} rhs={w['rhs']}")
        return head + f"indeterminate on n<={n_max}; see observed data"


@dataclass(frozen=True)
class Context:
    cache: DistributionCache | None = None
    workers: int = 1
    limit: int | None = None

    def dist(self, family: str, which: str, n: int, k: int):
        return distribution(DistributionKey(family, which, n, k), cache=self.cache,
                            workers=self.workers, limit=self.limit)


Check = tuple[str, object, object]


@dataclass(frozen=True)
class Claim:
    id: str
    family: str
    description: str
    # per-partition checks: p -> [(quantity, lhs, rhs)]
    pointwise: Callable[[object], list[Check]] | None = None
    # per-(n, k) checks over whole sets: (ctx, n, k) -> [(quantity, lhs, rhs)]
    aggregate: Callable[[Context, int, int], list[Check]] | None = None
    k_min: int = 0


def _parse(family: str, text: str):
    if family.startswith("typeA"):
        return typea.parse_partition_a(text)
    return typeb.parse_partition(text)


def _poly_claim(lhs: Callable, rhs: Callable, label: str):
    def run(ctx: Context, n: int, k: int) -> list[Check]:
        return [(label, lhs(ctx, n, k), rhs(n, k))]
    return run


# pointwise checks -----------------------------------------------------------

def _lob_prime(p):
    return [("lob'(pi) vs k", typeb.stat_b_prime(p, "lob"), p.k)]


def _f_involution(p):
    fp = typeb.f_map(p)
    return [("f(pi) standard", fp.standard_form, True),
            ("f(f(pi)) vs pi", str(typeb.f_map(fp)), str(p))]


def _conj_rcb_f(p):
    k = p.k
    return [("rcb(f(pi)) vs ros(pi) + k(k-1)",
             typeb.stat_b(typeb.f_map(p), "rcb"), typeb.stat_b(p, "ros") + k * (k - 1))]


def _srgf_roundtrip(p):
    w = srgf.encode(p)
    return [("decode(encode(pi)) vs pi", str(srgf.decode(w)), str(p)),
            ("max letter vs k", w.k, p.k)]


def _vector_sums(p):
    w = srgf.encode(p)
    return [(f"sum {v} vector vs {srgf.VECTOR_STAT[v]}",
             sum(srgf.stat_vector(w, v)), typeb.stat_b(p, srgf.VECTOR_STAT[v]))
            for v in srgf.VECTORS]


def _foata(p):
    fp = bijmaps.foata(p)
    maj = lambda x: srgf.maj_srgf(srgf.encode(x))
    return [("F(pi) standard", fp.standard_form, True),
            ("inv(pi) vs maj(F(pi))", typeb.inv(p), maj(fp)),
            ("inv(F(pi)) vs maj(pi)", typeb.inv(fp), maj(p))]


def _matrix(p):
    m = bijmaps.reduced_matrix(p)
    return [("matrix invariants", m.problems(), []),
            ("maj(h(pi)) vs maj(encode(pi))", bijmaps.maj_matrix(m), srgf.maj_srgf(srgf.encode(p)))]


# aggregate checks -----------------------------------------------------------

def _image_size(fn: Callable, label: str):
    def run(ctx: Context, n: int, k: int) -> list[Check]:
        parts = list(typeb.enumerate_b(n, k))
        return [(label, len({fn(p) for p in parts}), len(parts))]
    return run


def _srgf_onto(ctx: Context, n: int, k: int) -> list[Check]:
    encoded = sorted(srgf.encode(p).word for p in typeb.enumerate_b(n, k))
    words = sorted(w.word for w in srgf.enumerate_words(n, k))
    return [("encoded words vs valid words", len(encoded), len(words)),
            ("image equals SR_{n,k}", encoded == words, True)]


def _counts(ctx: Context, n: int, k: int) -> list[Check]:
    out: list[Check] = [("|S_B(<n>,k)| vs S_B(n,k)",
                         sum(1 for _ in typeb.enumerate_b(n, k)), stirling_B(n, k))]
    if n <= LIMITS["ordered"]:
        out.append(("ordered count vs (2k)!! S_B(n,k)",
                    sum(1 for _ in typeb.enumerate_b(n, k, ordered=True)),
                    double_factorial_even(k) * stirling_B(n, k)))
    if k == n:
        total = sum(sum(1 for _ in typeb.enumerate_b(n, j)) for j in range(n + 1))
        out.append(("sum_k |S_B(<n>,k)| vs Dowling", total, dowling(n)))
    return out


def _equidist(a: str, b: str):
    def run(ctx: Context, n: int, k: int) -> list[Check]:
        return [(f"ordered {a} vs {b} distribution",
                 str(ctx.dist("ordered", a, n, k)), str(ctx.dist("ordered", b, n, k)))]
    return run


def _poly(fam: str, which: str, rhs: Callable, label: str):
    def run(ctx: Context, n: int, k: int) -> list[Check]:
        return [(label, str(ctx.dist(fam, which, n, k)), str(rhs(n, k)))]
    return run


CLAIMS: dict[str, Claim] = {c.id: c for c in [
    Claim("thmA-ros", "typeA-ordered", "sum q^ROS over ordered partitions of [n] = [k]! S_q(n,k)",
          aggregate=_poly("typeA-ordered", "ROS", lambda n, k: q_factorial(k) * stirling_q(n, k),
                          "ROS distribution vs [k]! S_q(n,k)")),
    Claim("ss-inv-std", "standard", "sum q^inv over standard partitions = S_B[n,k]",
          aggregate=_poly("standard", "inv", stirling_B_q, "inv distribution vs S_B[n,k]")),
    Claim("ss-inv-ord", "ordered", "sum q^inv over ordered partitions = [2k]!! S_B[n,k]",
          aggregate=_poly("ordered", "inv", stirling_B_ordered_q, "inv distribution vs S^o_B[n,k]")),
    Claim("thm-los-std", "standard", "sum q^los' over standard partitions = q^(k(k+1)) S_B[n,k]",
          aggregate=_poly("standard", "los'", lambda n, k: stirling_B_q(n, k).shift(k * (k + 1)),
                          "los' distribution vs q^(k(k+1)) S_B[n,k]")),
    Claim("thm-los-ord", "ordered", "sum q^los' over ordered partitions = q^k S^o_B[n,k]",
          aggregate=_poly("ordered", "los'", lambda n, k: stirling_B_ordered_q(n, k).shift(k),
                          "los' distribution vs q^k S^o_B[n,k]")),
    Claim("lemma-lob", "standard", "lob'(pi) = k on every standard partition", pointwise=_lob_prime),
    Claim("cor-lob", "ordered", "generating functions of lob' (reported, not asserted)"),
    Claim("equidist-ros-rcb", "ordered", "ros and rcb equidistributed on ordered partitions",
          aggregate=_equidist("ros", "rcb")),
    Claim("equidist-rob-rcs", "ordered", "rob and rcs equidistributed on ordered partitions",
          aggregate=_equidist("rob", "rcs")),
    Claim("lemma-f-involution", "standard", "f = standardized complement is an involution",
          pointwise=_f_involution),
    Claim("conj-rcb-f", "standard", "rcb(f(pi)) = ros(pi) + k(k-1)", pointwise=_conj_rcb_f),
    Claim("srgf-bijection", "standard", "encode/decode is a bijection onto SR_{n,k}",
          pointwise=_srgf_roundtrip, aggregate=_srgf_onto),
    Claim("vector-sums", "standard", "each SRGF vector sums to its set statistic",
          pointwise=_vector_sums),
    Claim("foata-interchange", "standard", "F is a bijection with inv(pi) = maj(F(pi)), inv(F(pi)) = maj(pi)",
          pointwise=_foata, aggregate=_image_size(bijmaps.foata, "|F(S_B(<n>,k))| vs |S_B(<n>,k)|")),
    Claim("matrix-maj", "standard", "maj(h(pi)) = maj(pi) and h is injective",
          pointwise=_matrix,
          aggregate=_image_size(lambda p: bijmaps.reduced_matrix(p).rows, "|h(S_B(<n>,k))| vs |S_B(<n>,k)|")),
    Claim("dualmaj-scan", "ordered", "dual major index generating function vs its recurrence (all readings)"),
    Claim("count-recurrence", "standard", "enumeration counts vs S_B(n,k) and Dowling numbers",
          aggregate=_counts),
]}


def instances(n_max: int, k_max: int | None = None) -> Iterator[tuple[int, int]]:
    for n in range(n_max + 1):
        for k in range(min(n, n_max if k_max is None else k_max) + 1):
            yield n, k


def _first_failure(checks: Iterable[Check]) -> Check | None:
    for quantity, lhs, rhs in checks:
        if lhs != rhs:
            return quantity, lhs, rhs
    return None


def _witness(n: int, k: int, partition, found: Check) -> dict:
    quantity, lhs, rhs = found
    return {"partition": None if partition is None else str(partition),
            "n": n, "k": k, "quantity": quantity, "lhs": lhs, "rhs": rhs}


def check(claim_id: str, n_max: int, k_max: int | None = None, *,
          cache: DistributionCache | None = None, workers: int = 1,
          limit: int | None = None) -> ClaimReport:
    """Evaluate a claim over every (n, k) in range, stopping at the first failure."""
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; expected one of {sorted(CLAIMS)}")
    if claim_id == "dualmaj-scan":
        return dualmaj_scan(n_max, k_max, cache=cache, workers=workers, limit=limit)
    claim = CLAIMS[claim_id]
    check_limit(claim.family, n_max, limit)
    ctx = Context(cache, workers, limit)
    start = time.perf_counter()
    if claim_id == "cor-lob":
        report = _cor_lob(ctx, n_max, k_max)
        report.ms = (time.perf_counter() - start) * 1000
        return report
    done: list[tuple[int, int]] = []
    report_polys: dict[str, dict] = {}
    witness = None
    for n, k in instances(n_max, k_max):
        done.append((n, k))
        if claim.pointwise is not None:
            for p in enumerate_family(claim.family, n, k):
                found = _first_failure(claim.pointwise(p))
                if found:
                    witness = _witness(n, k, p, found)
                    break
        if witness is None and claim.aggregate is not None:
            checks = claim.aggregate(ctx, n, k)
            polys = {q: lhs for q, lhs, _ in checks if isinstance(lhs, str)}
            if polys and claim.pointwise is None:
                report_polys[f"{n},{k}"] = polys
            found = _first_failure(checks)
            if found:
                witness = _witness(n, k, None, found)
        if witness is not None:
            break
    report = ClaimReport(claim_id, done, COUNTEREXAMPLE if witness else VERIFIED, witness)
    if report_polys:
        report.observed["distributions"] = report_polys
    if claim_id == "conj-rcb-f":
        report.observed["generating_function_identity"] = {
            f"{n},{k}": ctx.dist("standard", "rcb", n, k) == stirling_B_q(n, k).shift(k * (k - 1))
            for n, k in instances(n_max, k_max)}
    report.ms = (time.perf_counter() - start) * 1000
    return report


def replay(report: ClaimReport | dict) -> bool:
    """Re-evaluate a counterexample witness; True when it still fails identically."""
    data = report.to_json() if isinstance(report, ClaimReport) else report
    w = data.get("witness")
    if data.get("verdict") != COUNTEREXAMPLE or not w:
        return False
    claim = CLAIMS[data["claim"]]
    if w["partition"] is not None:
        checks = claim.pointwise(_parse(claim.family, w["partition"]))
    else:
        checks = claim.aggregate(Context(), w["n"], w["k"])
    for quantity, lhs, rhs in checks:
        if quantity == w["quantity"]:
            return lhs != rhs and _jsonable(lhs) == w["lhs"] and _jsonable(rhs) == w["rhs"]
    return False


def _jsonable(x):
    return list(x) if isinstance(x, tuple) else x


def _cor_lob(ctx: Context, n_max: int, k_max: int | None) -> ClaimReport:
    rows = []
    for n, k in instances(n_max, k_max):
        std = ctx.dist("standard", "lob'", n, k)
        ordd = ctx.dist("ordered", "lob'", n, k)
        row = {
            "n": n, "k": k,
            "standard": str(std),
            "standard_matches_q^k_S_B[n,k]": std == stirling_B_q(n, k).shift(k),
            "standard_matches_q^k_S_B(n,k)": std == QPolynomial.monomial(k, stirling_B(n, k)),
            "ordered": str(ordd),
            "ordered_matches_S_B[n,k]": ordd == stirling_B_q(n, k),
            "ordered_value_at_1": ordd(1),
            "ordered_over_S_B(n,k)": str(_divide_by_int(ordd, stirling_B(n, k))),
        }
        if k == 1:
            row["ordered_matches_(1+q)S_B[n,1]"] = ordd == stirling_B_q(n, 1) * (1, 1)
            row["ordered_matches_(1+q)S_B(n,1)"] = ordd == QPolynomial([1, 1]) * stirling_B(n, 1)
        rows.append(row)
    return ClaimReport("cor-lob", list(instances(n_max, k_max)), INDETERMINATE,
                       observed={"rows": rows})


def _divide_by_int(poly, d: int):
    if d and all(c % d == 0 for c in poly.coeffs):
        return type(poly)(c // d for c in poly.coeffs)
    return None


def dualmaj_scan(n_max: int, k_max: int | None = None, *, cache: DistributionCache | None = None,
                 workers: int = 1, limit: int | None = None) -> ClaimReport:
    """Compare the dual major index distribution with its recurrence under every reading."""
    check_limit("ordered", n_max, limit)
    ctx = Context(cache, workers, limit)
    start = time.perf_counter()
    table: dict[str, list[dict]] = {}
    matching = []
    for v in bijmaps.DUAL_VARIANTS:
        fam = "ordered" if v.ordered else "standard"
        rows = []
        for n, k in instances(n_max, k_max):
            got = ctx.dist(fam, f"dualmaj:{v.id}", n, k)
            rec = dualmaj_rec(n, k)
            rows.append({"n": n, "k": k, "enumerated": str(got), "recurrence": str(rec),
                         "match": got == rec})
        table[v.id] = rows
        if all(r["match"] for r in rows):
            matching.append(v.id)
    report = ClaimReport("dualmaj-scan", list(instances(n_max, k_max)), INDETERMINATE,
                         observed={"matching_variants": matching, "table": table})
    report.ms = (time.perf_counter() - start) * 1000
    return report


def format_scan(report: ClaimReport) -> str:
    lines = ["variant\tn\tk\tenumerated\trecurrence\tmatch"]
    for vid, rows in report.observed["table"].items():
        for r in rows:
            lines.append(f"{vid}\t{r['n']}\t{r['k']}\t{r['enumerated']}\t{r['recurrence']}\t"
                         f"{'yes' if r['match'] else 'no'}")
    matching = report.observed["matching_variants"]
    lines.append("matching variants: " + (", ".join(matching) if matching else "none"))
    return "\n".join(lines)
