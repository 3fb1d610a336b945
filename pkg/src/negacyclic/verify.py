"""Verification harness: reference tables, verdict records, the persistent
result cache, and the exhaustive best-negacyclic/best-cyclic search.

verify_claims() runs a scope of checks, compares computed distance reports
against the bundled claim tables, and returns a manifest of one record per
claim.  Mismatches are data (verdict="mismatch", nonzero exit status), never
crashes.  Manifests are deterministic apart from timestamps and wall times.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import time
import warnings
from dataclasses import dataclass, field as dc_field
from datetime import datetime, timezone
from typing import Optional

from . import families
from .codes import (CodeError, NegacyclicCode, residue_distance_relation,
                    uv_construct)
from .cosets import build_cosets, weight_class_sizes, weight_classes, wt3
from .distance import (DistanceReport, SearchBudget, distance_report,
                       exact_distance_enum, weight_distribution)
from .families import Claim
from .ff import make_field
from .poly import Poly

SCHEMA = 1

CACHE_ENV = "NEGACYCLIC_CACHE"

#: (n, k) -> (best negacyclic d, best cyclic d)
TABLE1 = {
    (10, 4): (6, 4),
    (10, 6): (4, 2),
    (14, 6): (6, 4),
    (14, 8): (5, 2),
    (20, 10): (7, 6),
    (20, 12): (5, 4),
    (20, 16): (3, 2),
}


def descriptor_hash(desc: dict) -> str:
    return hashlib.sha256(
        json.dumps(desc, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


class ResultCache:
    """JSON-file store keyed by code descriptor + engine budget.

    Writes are atomic (write-temp-then-rename).  A corrupt file is rebuilt
    from scratch with a warning, never partially read.
    """

    def __init__(self, path: Optional[str] = None):
        self.path = path or os.environ.get(CACHE_ENV) or "results.json"
        self.hits = 0
        self.misses = 0
        self._data: Optional[dict] = None

    def _load(self) -> dict:
        if self._data is None:
            try:
                with open(self.path) as fh:
                    payload = json.load(fh)
                if payload.get("schema") != SCHEMA:
                    raise ValueError(f"unknown cache schema {payload.get('schema')}")
                self._data = dict(payload["records"])
            except FileNotFoundError:
                self._data = {}
            except (ValueError, KeyError, json.JSONDecodeError) as exc:
                warnings.warn(f"rebuilding corrupt result cache {self.path}: {exc}")
                self._data = {}
        return self._data

    def get(self, key: str) -> Optional[dict]:
        got = self._load().get(key)
        if got is None:
            self.misses += 1
        else:
            self.hits += 1
        return got

    def put(self, key: str, value: dict):
        data = self._load()
        data[key] = value
        payload = {"schema": SCHEMA, "records": data}
        d = os.path.dirname(os.path.abspath(self.path))
        fd, tmp = tempfile.mkstemp(dir=d, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh, sort_keys=True)
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def report_cache_key(code, budget: SearchBudget) -> str:
    payload = {
        "code": code.descriptor(),
        "max_message_enum": budget.max_message_enum,
        "max_column_weight": budget.max_column_weight,
    }
    return descriptor_hash(payload)


def cached_distance_report(code, budget: Optional[SearchBudget] = None,
                           threads: int = 1,
                           cache: Optional[ResultCache] = None) -> DistanceReport:
    budget = budget or SearchBudget()
    if cache is None:
        return distance_report(code, budget, threads)
    key = report_cache_key(code, budget)
    hit = cache.get(key)
    if hit is not None:
        rep = DistanceReport.from_json(hit)
        rep.elapsed_s = 0.0
        return rep
    rep = distance_report(code, budget, threads)
    cache.put(key, rep.to_json())
    return rep


# ---------------------------------------------------------------------------
# best code of given length/dimension by exhaustive coset-subset search

def best_code_search(q: int, n: int, k: int, lam_int: int = -1,
                     budget: Optional[SearchBudget] = None, threads: int = 1,
                     cache: Optional[ResultCache] = None):
    """Exhaustive search over zero-coset subsets with degree n-k.

    Returns (best_d, generator Poly, best_code).  Candidates of dimension
    up to 3^12-style enumeration go to the enumerator; larger dimensions go
    to the column search, falling back to enumeration within the caller's
    budget if the search cannot settle them.
    """
    budget = budget or SearchBudget()
    field = make_field(q, 1)
    R = 2 * n if lam_int == -1 else n
    table = build_cosets(q, R)
    leaders = [l for l in (table.odd_leaders if lam_int == -1 else table.leaders)]
    if len(leaders) > 20:
        raise CodeError(f"{2 ** len(leaders)} subsets exceed the search guard")
    sizes = [len(table.cosets[l]) for l in leaders]
    target = n - k
    picks = []
    for mask in range(1 << len(leaders)):
        deg = sum(s for i, s in enumerate(sizes) if mask >> i & 1)
        if deg == target:
            picks.append([leaders[i] for i in range(len(leaders)) if mask >> i & 1])
    if not picks:
        raise CodeError(f"no {'negacyclic' if lam_int == -1 else 'cyclic'} "
                        f"code of length {n} and dimension {k} exists")
    picks.sort()
    enum_cap = min(budget.max_message_enum, 3 ** 12)
    best = None
    for leaders_pick in picks:
        code = NegacyclicCode.from_zeros(field, n, leaders_pick, lam_int)
        small = SearchBudget(max_message_enum=enum_cap,
                             max_column_weight=budget.max_column_weight,
                             time_cap=budget.time_cap)
        rep = cached_distance_report(code, small, threads, cache)
        if not rep.exact and q ** k <= budget.max_message_enum:
            rep = cached_distance_report(code, budget, threads, cache)
        if not rep.exact:
            raise CodeError(
                f"candidate {code!r} not settled exactly within budget")
        if best is None or rep.d > best[0]:
            best = (rep.d, code.g, code)
    return best


# ---------------------------------------------------------------------------
# verdicts

MATCH, BOUND_ONLY, MISMATCH, EXTERNAL = (
    "match", "lower-bound-only", "mismatch", "external-unverified")

_VERIFIED, _OPEN, _CONTRA = 0, 1, 2


def _status_exact(report: DistanceReport, v: int) -> int:
    if report.exact:
        return _VERIFIED if report.lower == v else _CONTRA
    if not (report.lower <= v <= report.upper):
        return _CONTRA
    return _OPEN


def _status_interval(report: DistanceReport, lo: int, hi: int) -> int:
    if report.lower >= lo and report.upper <= hi:
        return _VERIFIED
    if report.lower > hi or report.upper < lo:
        return _CONTRA
    return _OPEN


def _status_lower(report: DistanceReport, lo: int) -> int:
    if report.lower >= lo:
        return _VERIFIED
    if report.upper < lo:
        return _CONTRA
    return _OPEN


def claim_verdict(claim: Claim, k: int, report: Optional[DistanceReport]) -> str:
    if report is None:
        return EXTERNAL
    statuses = [_VERIFIED if claim.k == k else _CONTRA]
    if claim.d_exact is not None:
        statuses.append(_status_exact(report, claim.d_exact))
    if claim.d_interval is not None:
        statuses.append(_status_interval(report, *claim.d_interval))
    if claim.d_lower is not None:
        statuses.append(_status_lower(report, claim.d_lower))
    if _CONTRA in statuses:
        return MISMATCH
    if all(s == _VERIFIED for s in statuses):
        return MATCH
    return BOUND_ONLY


def make_record(label: str, claim: Claim, descriptor: Optional[dict],
                computed: Optional[dict], verdict: str,
                work: int = 0, elapsed: float = 0.0) -> dict:
    if not claim.source:
        raise ValueError(f"record {label} lacks a claim source")
    return {
        "schema": SCHEMA,
        "label": label,
        "descriptor": descriptor,
        "code_hash": descriptor_hash(descriptor) if descriptor else None,
        "claim": claim.to_json(),
        "computed": computed,
        "verdict": verdict,
        "work": work,
        "elapsed_s": round(elapsed, 6),
        "timestamp": datetime.now(timezone.utc).isoformat(),
    }


def _code_record(label: str, claim: Claim, code, budget, threads, cache) -> dict:
    t0 = time.monotonic()
    rep = cached_distance_report(code, budget, threads, cache)
    verdict = claim_verdict(claim, code.k, rep)
    return make_record(label, claim, code.descriptor(), rep.to_json(), verdict,
                       rep.work, time.monotonic() - t0)


@dataclass
class Manifest:
    scope: str
    budget: SearchBudget
    records: list[dict] = dc_field(default_factory=list)

    @property
    def summary(self) -> dict:
        out = {MATCH: 0, BOUND_ONLY: 0, MISMATCH: 0, EXTERNAL: 0}
        for r in self.records:
            out[r["verdict"]] += 1
        return out

    @property
    def exit_code(self) -> int:
        return 2 if self.summary[MISMATCH] else 0

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "scope": self.scope,
            "budget": {
                "max_message_enum": self.budget.max_message_enum,
                "max_column_weight": self.budget.max_column_weight,
            },
            "summary": self.summary,
            "records": self.records,
        }


# ---------------------------------------------------------------------------
# scope runners

def _run_table1(budget, threads, cache, records, overrides):
    for (n, k), (d_nega, d_cyc) in sorted(TABLE1.items()):
        for lam, d_ref, kind in ((-1, d_nega, "negacyclic"), (1, d_cyc, "cyclic")):
            label = f"table1/n={n}/k={k}/{kind}"
            claim = overrides.get(label) or Claim(
                label, n, k, "reference-table/best-codes", d_exact=d_ref)
            t0 = time.monotonic()
            d, gen, code = best_code_search(3, n, k, lam, budget, threads, cache)
            rep = DistanceReport(d, d, True, "search-best",
                                 lower_src="exhaustive subset search",
                                 upper_src="exhaustive subset search")
            verdict = claim_verdict(claim, code.k, rep)
            computed = rep.to_json()
            computed["generator"] = gen.to_text()
            records.append(make_record(label, claim, code.descriptor(),
                                       computed, verdict,
                                       elapsed=time.monotonic() - t0))


def _run_table2(budget, threads, cache, records, overrides):
    for rho, row in sorted(families.FAMILY1_TABLE.items()):
        if rho not in families.FAMILY1_BUILDABLE:
            for part, (n, k, d) in sorted(row.items()):
                label = f"table2/rho={rho}/{part}"
                claim = overrides.get(label) or Claim(
                    part, n, k, "reference-table/family1", d_exact=d)
                records.append(make_record(label, claim, None, None, EXTERNAL))
            continue
        built = families.build_family1(rho)
        parts = {"code": built.code, "dual": built.dual,
                 "companion": built.companion,
                 "companion_dual": built.companion_dual}
        for part, code in sorted(parts.items()):
            n, k, d = row[part]
            label = f"table2/rho={rho}/{part}"
            claim = overrides.get(label) or Claim(
                part, n, k, "reference-table/family1", d_exact=d)
            records.append(_code_record(label, claim, code, budget, threads, cache))


def _example_records(kind, builds, budget, threads, cache, records, overrides):
    for key, code, dual, code_ref, dual_ref in builds:
        for part, c, (n, k, d) in (("code", code, code_ref),
                                   ("dual", dual, dual_ref)):
            label = f"{kind}/{key}/{part}"
            claim = overrides.get(label) or Claim(
                part, n, k, f"example/{kind}", d_exact=d)
            records.append(_code_record(label, claim, c, budget, threads, cache))


def _run_examples(budget, threads, cache, records, overrides):
    f2 = []
    for ell, n, code_ref, dual_ref in families.FAMILY2_EXAMPLES:
        b = families.build_family2(ell, n)
        f2.append((f"l={ell}/n={n}", b.code, b.dual, code_ref, dual_ref))
    _example_records("family2", f2, budget, threads, cache, records, overrides)
    f3 = []
    for m, n, code_ref, dual_ref in families.FAMILY3_EXAMPLES:
        b = families.build_family3(m, n)
        f3.append((f"m={m}/n={n}", b.code, b.dual, code_ref, dual_ref))
    _example_records("family3", f3, budget, threads, cache, records, overrides)


def _run_family4(budget, threads, cache, records, overrides):
    for j in (1, 3):
        b = families.build_family4(j, 3)
        label = f"family4/m=3/j={j}"
        claim = overrides.get(label) or b.claims["code"]
        records.append(_code_record(label, claim, b.code, budget, threads, cache))
    for m in (5, 7):
        built = {j: families.build_family4(j, m) for j in (1, 3)}
        dim1, dim3 = families._family4_dims(m)
        for j, expect in ((1, dim1), (3, dim3)):
            label = f"family4/m={m}/dims/j={j}"
            claim = overrides.get(label) or Claim(
                "dims", built[j].code.n, expect, "family4/dims")
            ok = built[j].code.k == expect
            records.append(make_record(
                label, claim, built[j].code.descriptor(),
                {"k": built[j].code.k}, MATCH if ok else MISMATCH))
        label = f"family4/m={m}/duality"
        dual_leaders = built[1].code.dual().zero_leaders
        holds = dual_leaders == built[3].code.zero_leaders
        claim = overrides.get(label) or Claim(
            "duality", built[1].code.n, built[1].code.k, "family4/duality")
        records.append(make_record(
            label, claim, built[1].code.descriptor(),
            {"holds": bool(holds)}, MATCH if holds else MISMATCH))
        for j in (1, 3):
            label = f"family4/m={m}/multiplier/j={j}"
            claim = overrides.get(label) or built[j].claims["code"]
            v, guaranteed = families.family4_multiplier(j, m)
            b = built[j].code.bch_bound(v)
            ok = (b >= guaranteed and claim.d_lower is not None
                  and b >= claim.d_lower)
            records.append(make_record(
                label, claim, built[j].code.descriptor(),
                {"v": v, "bch_bound": b, "guaranteed": guaranteed},
                MATCH if ok else MISMATCH))


def _property_checks(budget, threads, cache) -> list[tuple[str, bool, dict]]:
    """A compact battery of structural identities, each (label, holds, info)."""
    out = []
    gf3 = make_field(3, 1)

    b2 = families.build_family2(2, 10)
    c10, d10 = b2.code, b2.dual
    ok = (c10.g * c10.h) == Poly.x_pow_minus(gf3, 10, -gf3.one())
    out.append(("properties/generator-check-product", ok, {"n": 10}))
    elig = set(range(1, 2 * c10.n, 2))
    recip = {(2 * c10.n - i) % (2 * c10.n)
             for i in elig - set(c10.zero_exponents)}
    out.append(("properties/dual-zero-reciprocity",
                recip == set(d10.zero_exponents), {"n": 10}))

    b3 = families.build_family3(3, 13)
    wd = weight_distribution(b3.code, SearchBudget())
    wd_psi = weight_distribution(b3.code.psi_image(), SearchBudget())
    out.append(("properties/psi-weight-preservation", wd == wd_psi, {"n": 13}))

    gf5 = make_field(5, 1)
    x6p1 = Poly.x_pow_minus(gf5, 6, -gf5.one())
    lin1 = Poly.from_scalars(gf5, [3, 1])
    lin2 = Poly.from_scalars(gf5, [2, 1])
    code = NegacyclicCode.from_generator(gf5, 6, lin1 * lin2, -1)
    r1, r2, lam = code.residue_decompose()
    ok_dim = code.k == r1.k + r2.k
    d1 = exact_distance_enum(r1).d if r1.k else None
    d2 = exact_distance_enum(r2).d if r2.k else None
    rel = residue_distance_relation(d1, d2)
    d_true = exact_distance_enum(code).d
    ok_rel = (rel[0] == "exact" and rel[1] == d_true) or \
             (rel[0] == "interval" and rel[1] <= d_true <= rel[2])
    wd_uv = weight_distribution(uv_construct(r1, r2), SearchBudget())
    wd_c = weight_distribution(code, SearchBudget())
    out.append(("properties/even-length-split", ok_dim and ok_rel,
                {"dims": [code.k, r1.k, r2.k], "relation": list(rel)}))
    out.append(("properties/uv-weight-equivalence", wd_uv == wd_c, {"q": 5}))

    b1 = families.build_family1(5)
    words = {tuple(int(v) for v in w) for w in b1.code.codewords()}
    out.append(("properties/trace-representation",
                b1.code.trace_code_set() == words, {"rho": 5}))

    ok_counts = all(weight_classes(m).class_sizes == weight_class_sizes(m)
                    for m in range(2, 7))
    out.append(("properties/digit-class-counts", ok_counts, {"m": "2..6"}))

    ok_compl = all(wt3(3 ** s - 1 - i) == 2 * s - wt3(i)
                   for s in range(2, 9) for i in range(3 ** s))
    out.append(("properties/digit-complement", ok_compl, {"s": "2..8"}))

    rep = exact_distance_enum(c10)
    bch = c10.best_bch_multiplier()[1]
    out.append(("properties/bch-below-exact", bch <= rep.d,
                {"bch": bch, "d": rep.d}))
    return out


def _run_properties(budget, threads, cache, records, overrides):
    for label, ok, info in _property_checks(budget, threads, cache):
        claim = overrides.get(label) or Claim(
            label.split("/", 1)[1], 0, 0, "structural-identity")
        records.append(make_record(label, claim, None,
                                   {"holds": bool(ok), **info},
                                   MATCH if ok else MISMATCH))


SCOPES = ("table1", "table2", "examples", "family4", "properties", "all")


def verify_claims(scope: str = "all", budget: Optional[SearchBudget] = None,
                 threads: int = 1, cache: Optional[ResultCache] = None,
                 claims_override: Optional[dict[str, Claim]] = None) -> Manifest:
    """Run one verification scope and return its manifest.

    claims_override substitutes specific claims by record label; it exists so
    harness failure paths (verdict=mismatch, exit code 2) stay testable.
    """
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; pick one of {SCOPES}")
    budget = budget or SearchBudget()
    overrides = claims_override or {}
    manifest = Manifest(scope, budget)
    runners = {
        "table1": _run_table1,
        "table2": _run_table2,
        "examples": _run_examples,
        "family4": _run_family4,
        "properties": _run_properties,
    }
    order = [scope] if scope != "all" else list(runners)
    for name in order:
        runners[name](budget, threads, cache, manifest.records, overrides)
    return manifest


def render_scope(manifest: Manifest) -> str:
    """Plain-text table of one manifest's claims vs computed values."""
    lines = [f"{'record':44} {'claimed':>14} {'computed':>16} verdict"]
    for r in manifest.records:
        claim = r["claim"]
        claimed = claim.get("d_claim", claim.get("d_lower_claim", ""))
        if "d_interval_claim" in claim:
            lo, hi = claim["d_interval_claim"]
            claimed = f"{lo}..{hi}"
        comp = r["computed"] or {}
        if "lower" in comp:
            shown = (str(comp["lower"]) if comp.get("exact")
                     else f"{comp['lower']}..{comp['upper']}")
        elif "bch_bound" in comp:
            shown = f">={comp['bch_bound']}"
        elif "holds" in comp:
            shown = str(comp["holds"])
        elif "k" in comp:
            shown = f"k={comp['k']}"
        else:
            shown = "-"
        lines.append(f"{r['label']:44} {str(claimed):>14} {shown:>16} {r['verdict']}")
    s = manifest.summary
    lines.append(f"summary: {s[MATCH]} match, {s[BOUND_ONLY]} bound-only, "
                 f"{s[MISMATCH]} mismatch, {s[EXTERNAL]} external-unverified")
    return "\n".join(lines)
