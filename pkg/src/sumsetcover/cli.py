"""Command-line front end.

Subcommands: bound, decompose, verify, symmetric, check-capset,
check-sumfree, oracle, trials.  Instances come in as JSON files; reports go
to stdout as a human-readable summary followed by a JSON block (or JSON only
with --json).  Every checked inequality appears in the report with both
sides evaluated, so a report can be audited without the library.

Exit codes: 0 ok, 1 verification failure, 2 invalid input, 3 cap refusal.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from dataclasses import dataclass

from .decompose import (
    choose_degree,
    decompose,
    degree_bound,
    run_pipeline,
    verify_decomposition,
)
from .errors import (
    BoundViolated,
    DegreeTooHigh,
    DimensionMismatch,
    EnumerationTooLarge,
    NotPrime,
    ParseError,
    SearchTooLarge,
    ValidationError,
)
from .field import DEFAULT_ENUM_CAP, FieldVector, PointSet, all_points, is_prime, sumset
from .monomials import capset_bound_M, degree_counts, growth_estimate
from .oracle import (
    DEFAULT_SEARCH_CAP,
    OrderedPairFamily,
    check_capset_bound,
    check_sumfree_bound,
    greedy_decomposition,
    is_matching_sumfree,
    oracle_min_decomposition,
)
from .summatrix import clp_decompose, clp_reconstruct
from .linalg import matrix_rank

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_INPUT = 2
EXIT_CAP_REFUSED = 3


@dataclass(frozen=True)
class ParsedInstance:
    """Validated content of an instance file."""

    q: int
    n: int
    s_set: PointSet
    t_set: PointSet | None
    s_order: tuple[FieldVector, ...]
    t_order: tuple[FieldVector, ...] | None


def _coords_field(raw: dict, key: str, q: int, n: int) -> list[tuple[int, ...]]:
    value = raw[key]
    if not isinstance(value, list):
        raise ParseError(f"field {key!r} must be a list of coordinate lists")
    out: list[tuple[int, ...]] = []
    for idx, item in enumerate(value):
        if not isinstance(item, list) or not all(isinstance(c, int) for c in item):
            raise ParseError(f"{key}[{idx}] must be a list of integers")
        if len(item) != n:
            raise ValidationError(f"{key}[{idx}] has length {len(item)}, expected n={n}")
        if any(c < 0 or c >= q for c in item):
            raise ValidationError(f"{key}[{idx}] = {item} has a coordinate outside [0, {q})")
        out.append(tuple(item))
    if len(set(out)) != len(out):
        raise ValidationError(f"duplicate entries in {key}")
    return out


def parse_instance(path: str) -> ParsedInstance:
    """Read and validate a JSON instance file.

    Required fields: q (prime), n (>= 1), S.  Optional: T, and S_order /
    T_order for the paired-family checks (defaulting to the file order of
    S and T).
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("instance file must be a JSON object")
    for field in ("q", "n", "S"):
        if field not in raw:
            raise ParseError(f"missing required field {field!r}")
    q, n = raw["q"], raw["n"]
    if not isinstance(q, int) or not isinstance(n, int):
        raise ParseError("fields 'q' and 'n' must be integers")
    if not is_prime(q):
        raise ValidationError(f"q = {q} is not prime")
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")

    s_coords = _coords_field(raw, "S", q, n)
    s_set = PointSet.from_coords(q, n, s_coords)
    t_set = None
    t_coords: list[tuple[int, ...]] | None = None
    if "T" in raw:
        t_coords = _coords_field(raw, "T", q, n)
        t_set = PointSet.from_coords(q, n, t_coords)

    s_order = tuple(FieldVector(q, c) for c in (
        _coords_field(raw, "S_order", q, n) if "S_order" in raw else s_coords
    ))
    t_order = None
    if "T_order" in raw:
        t_order = tuple(FieldVector(q, c) for c in _coords_field(raw, "T_order", q, n))
    elif t_coords is not None:
        t_order = tuple(FieldVector(q, c) for c in t_coords)
    return ParsedInstance(q, n, s_set, t_set, s_order, t_order)


def _point_set_json(ps: PointSet) -> list[list[int]]:
    return [list(v.coords) for v in ps.ordered()]


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _check(name: str, passed: bool, lhs=None, rhs=None) -> dict:
    entry: dict = {"name": name, "passed": bool(passed)}
    if lhs is not None:
        entry["lhs"] = lhs
    if rhs is not None:
        entry["rhs"] = rhs
    return entry


def _emit(report: dict, human_lines: list[str], as_json: bool) -> None:
    if not as_json:
        for line in human_lines:
            print(line)
        print("--- report (json) ---")
    print(json.dumps(report, indent=2))


def _require_t(inst: ParsedInstance) -> PointSet:
    if inst.t_set is None:
        raise ValidationError("this subcommand needs a 'T' field in the instance file")
    return inst.t_set


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (report dict, human lines, exit code)


def _cmd_bound(args) -> tuple[dict, list[str], int]:
    q, n = args.q, args.n
    if not is_prime(q):
        raise ValidationError(f"q = {q} is not prime")
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    table = degree_counts(q, n)
    prefix = []
    acc = 0
    for c in table.counts:
        acc += c
        prefix.append(acc)
    rows = [
        {"d": d, "m_d": prefix[d], "bound_at_d": 2 * prefix[d // 2] + q**n - prefix[d]}
        for d in range(0, (q - 1) * n + 1)
    ]
    best_d, best_bound = choose_degree(q, n)
    capset_bound = capset_bound_M(q, n)
    checks = [
        _check("chosen_bound<=capset_bound", best_bound <= capset_bound, best_bound, capset_bound),
        _check("counts_sum_to_q^n", sum(table.counts) == q**n, sum(table.counts), q**n),
    ]
    outputs = {
        "q": q,
        "n": n,
        "space_size": q**n,
        "degree_table": rows,
        "chosen_degree": best_d,
        "chosen_bound": best_bound,
        "capset_bound": capset_bound,
    }
    human = [
        f"bound table for q={q}, n={n} (space size {q**n})",
        "  d  m_d  budget(d) = 2*m_(d//2) + q^n - m_d",
    ]
    for row in rows:
        human.append(f"  {row['d']:<3}{row['m_d']:<5}{row['bound_at_d']}")
    human.append(f"chosen degree d={best_d} with bound {best_bound}")
    human.append(f"progression-free budget 3*m_((q-1)n/3) = {capset_bound}")
    if args.growth_to:
        seq = growth_estimate(q, args.growth_to, digits=args.digits)
        outputs["growth"] = [str(c) for c in seq]
        human.append(f"growth of bound^(1/n) up to n={args.growth_to}:")
        for i, c in enumerate(seq, start=1):
            human.append(f"  n={i:<4} {c}")
    ok = all(c["passed"] for c in checks)
    report = _report("bound", {"q": q, "n": n, "growth_to": args.growth_to}, outputs, checks)
    return report, human, EXIT_OK if ok else EXIT_VERIFY_FAILED


def _decompose_checks(run, dec, chose_degree: bool) -> list[dict]:
    q, n = dec.s_witness.q, dec.s_witness.n
    space_size = q**n
    m_d = run.space.ambient_dim
    st_size = len(run.sum_set)
    dim_lower = m_d - space_size + st_size
    pivot_list = list(run.pivots.pivots)
    s_ord = run.s_input.ordered()
    t_ord = run.t_input.ordered()
    pivot_sums = [s_ord[i] + t_ord[j] for i, j in pivot_list]
    line_sums = sumset(run.decomposition.certificate.covered_rows, run.t_input).union(
        sumset(run.s_input, run.decomposition.certificate.covered_cols)
    )
    checks = [
        _check(
            "coverage_equals_sumset",
            verify_decomposition(run.s_input, run.t_input, dec.s_witness, dec.t_witness),
        ),
        _check("witness_total<=bound", dec.witness_total <= dec.bound, dec.witness_total, dec.bound),
        _check("dim_vanishing>=m_d-q^n+|S+T|", run.space.dim >= dim_lower, run.space.dim, dim_lower),
        _check(
            "uncovered<=q^n-m_d",
            len(dec.certificate.uncovered_sums) <= space_size - m_d,
            len(dec.certificate.uncovered_sums),
            space_size - m_d,
        ),
        _check("cover_size<=rank_bound", run.cover.size <= run.rank_bound, run.cover.size, run.rank_bound),
        _check("pivot_positions_distinct", len(set(pivot_list)) == len(pivot_list)),
        _check("pivot_sums_distinct", len(set(pivot_sums)) == len(pivot_sums)),
        _check(
            "lines_cover>=dim_vanishing_sums",
            sum(1 for w in pivot_sums if w in line_sums) >= run.space.dim,
            sum(1 for w in pivot_sums if w in line_sums),
            run.space.dim,
        ),
    ]
    if chose_degree:
        checks.append(
            _check(
                "chosen_bound<=capset_bound",
                dec.bound <= capset_bound_M(q, n),
                dec.bound,
                capset_bound_M(q, n),
            )
        )
    return checks


def _clp_report(run) -> tuple[list[dict], dict]:
    """Per-basis-element rank certificates for a pipeline run."""
    max_rank = 0
    max_terms = 0
    ok_reconstruct = True
    for mat in run.matrices:
        cert = clp_decompose(mat.source, run.degree)
        rebuilt = clp_reconstruct(cert, mat.rows, mat.cols)
        ok_reconstruct = ok_reconstruct and rebuilt == mat.entries
        rank = matrix_rank([list(r) for r in mat.entries], mat.q)
        max_rank = max(max_rank, rank)
        max_terms = max(max_terms, cert.term_count)
    checks = [
        _check("clp_reconstructions_exact", ok_reconstruct),
        _check("max_rank<=max_term_count", max_rank <= max_terms if run.matrices else True, max_rank, max_terms),
        _check("max_term_count<=rank_bound", max_terms <= run.rank_bound, max_terms, run.rank_bound),
    ]
    summary = {"max_rank": max_rank, "max_term_count": max_terms, "rank_bound": run.rank_bound}
    return checks, summary


def _cmd_decompose(args) -> tuple[dict, list[str], int]:
    inst = parse_instance(args.input)
    S, T = inst.s_set, _require_t(inst)
    chose = args.d is None
    if not S.members or not T.members:
        dec = decompose(S, T, args.d, cap=args.cap)
        checks = [_check("coverage_equals_sumset", verify_decomposition(S, T, dec.s_witness, dec.t_witness))]
        run = None
    else:
        run = run_pipeline(S, T, args.d, cap=args.cap)
        dec = run.decomposition
        checks = _decompose_checks(run, dec, chose)
        if args.certify_rank:
            clp_checks, clp_summary = _clp_report(run)
            checks.extend(clp_checks)
    outputs = {
        "q": inst.q,
        "n": inst.n,
        "sizes": {"S": len(S), "T": len(T), "S+T": len(sumset(S, T))},
        "degree": dec.degree,
        "degree_source": "minimized" if chose else "forced",
        "bound": dec.bound,
        "S_witness": _point_set_json(dec.s_witness),
        "T_witness": _point_set_json(dec.t_witness),
        "witness_total": dec.witness_total,
        "certificate": {
            "covered_rows": _point_set_json(dec.certificate.covered_rows),
            "covered_cols": _point_set_json(dec.certificate.covered_cols),
            "patch_reps": _point_set_json(dec.certificate.patch_reps),
            "uncovered_sums": _point_set_json(dec.certificate.uncovered_sums),
            "dim_vanishing": dec.certificate.dim_vanishing,
            "cover_size": dec.certificate.cover_size,
        },
    }
    if run is not None and args.certify_rank:
        outputs["rank_certificates"] = clp_summary
    if args.output:
        payload = {
            "q": inst.q,
            "n": inst.n,
            "S_witness": outputs["S_witness"],
            "T_witness": outputs["T_witness"],
        }
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    ok = all(c["passed"] for c in checks)
    human = [
        f"decompose: q={inst.q}, n={inst.n}, |S|={len(S)}, |T|={len(T)}, |S+T|={outputs['sizes']['S+T']}",
        f"degree d={dec.degree} ({outputs['degree_source']}), bound {dec.bound}",
        f"witness sizes |S*|={len(dec.s_witness)}, |T*|={len(dec.t_witness)} (total {dec.witness_total})",
        _human_checks(checks),
    ]
    report = _report(
        "decompose",
        _instance_payload(inst, d=args.d, cap=args.cap),
        outputs,
        checks,
    )
    return report, human, EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_verify(args) -> tuple[dict, list[str], int]:
    inst = parse_instance(args.input)
    S, T = inst.s_set, _require_t(inst)
    try:
        with open(args.witness, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {args.witness}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{args.witness} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict) or "S_witness" not in raw or "T_witness" not in raw:
        raise ParseError("witness file must be a JSON object with S_witness and T_witness")
    sw = PointSet.from_coords(inst.q, inst.n, _coords_field(raw, "S_witness", inst.q, inst.n))
    tw = PointSet.from_coords(inst.q, inst.n, _coords_field(raw, "T_witness", inst.q, inst.n))
    ok = verify_decomposition(S, T, sw, tw)
    checks = [
        _check("witnesses_within_parents", sw.issubset(S) and tw.issubset(T)),
        _check("coverage_equals_sumset", ok),
    ]
    outputs = {"witness_total": len(sw) + len(tw), "verified": ok}
    human = [
        f"verify: witness total {len(sw) + len(tw)}",
        _human_checks(checks),
    ]
    report = _report("verify", _instance_payload(inst, witness=raw), outputs, checks)
    return report, human, EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_symmetric(args) -> tuple[dict, list[str], int]:
    inst = parse_instance(args.input)
    S = inst.s_set
    dec = decompose(S, S, args.d, cap=args.cap)
    witness = dec.s_witness.union(dec.t_witness)
    double = sumset(S, S)
    checks = [
        _check("witness_within_set", witness.issubset(S)),
        _check("witness_plus_set_covers", sumset(witness, S) == double if len(S) else True),
        _check("witness_size<=bound", len(witness) <= dec.bound, len(witness), dec.bound),
    ]
    outputs = {
        "q": inst.q,
        "n": inst.n,
        "degree": dec.degree,
        "bound": dec.bound,
        "witness": _point_set_json(witness),
        "witness_size": len(witness),
        "set_size": len(S),
    }
    ok = all(c["passed"] for c in checks)
    human = [
        f"symmetric witness: |B| = {len(witness)} of |S| = {len(S)}, bound {dec.bound}",
        _human_checks(checks),
    ]
    report = _report("symmetric", _instance_payload(inst, d=args.d, cap=args.cap), outputs, checks)
    return report, human, EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_check_capset(args) -> tuple[dict, list[str], int]:
    inst = parse_instance(args.input)
    rep = check_capset_bound(inst.s_set, cap=args.cap)
    # inapplicable inputs (q = 2 or a progression present) fail nothing
    checks = [
        _check("size<=bound", rep.within_bound if rep.applicable else True, rep.set_size, rep.size_bound),
        _check("symmetric_witness_is_whole_set", rep.recovers_whole_set if rep.applicable else True),
    ]
    outputs = {
        "ap_free": rep.ap_free,
        "applicable": rep.applicable,
        "set_size": rep.set_size,
        "size_bound": rep.size_bound,
        "passed": rep.passed,
    }
    human = [
        f"check-capset: ap_free={rep.ap_free}, size {rep.set_size}, bound {rep.size_bound}"
        + ("" if rep.applicable else "  (not applicable)"),
        _human_checks(checks),
    ]
    report = _report("check-capset", _instance_payload(inst, cap=args.cap), outputs, checks)
    return report, human, EXIT_OK if rep.passed else EXIT_VERIFY_FAILED


def _cmd_check_sumfree(args) -> tuple[dict, list[str], int]:
    inst = parse_instance(args.input)
    if inst.t_order is None:
        raise ValidationError("check-sumfree needs 'T' or 'T_order' in the instance file")
    fam = OrderedPairFamily(inst.s_order, inst.t_order)
    matching = is_matching_sumfree(fam)
    checks = [_check("matching_sumfree", matching)]
    outputs: dict = {"n_pairs": len(fam), "matching_sumfree": matching}
    if matching:
        rep = check_sumfree_bound(fam, cap=args.cap)
        checks.extend(
            [
                _check("n_pairs<=bound", rep.within_bound, rep.n_pairs, rep.size_bound),
                _check("n_pairs<=witness_total", rep.n_pairs <= rep.witness_total, rep.n_pairs, rep.witness_total),
                _check("every_index_covered", rep.all_indices_covered),
            ]
        )
        outputs.update(
            {
                "size_bound": rep.size_bound,
                "witness_total": rep.witness_total,
                "passed": rep.passed,
            }
        )
    ok = all(c["passed"] for c in checks)
    human = [
        f"check-sumfree: N={len(fam)}, matching_sumfree={matching}",
        _human_checks(checks),
    ]
    report = _report("check-sumfree", _instance_payload(inst, cap=args.cap), outputs, checks)
    return report, human, EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_oracle(args) -> tuple[dict, list[str], int]:
    inst = parse_instance(args.input)
    S, T = inst.s_set, _require_t(inst)
    res = oracle_min_decomposition(S, T, search_cap=args.search_cap)
    gs, gt = greedy_decomposition(S, T)
    dec = decompose(S, T, cap=args.cap)
    greedy_total = len(gs) + len(gt)
    checks = [
        _check("oracle_witness_valid", verify_decomposition(S, T, res.best_s, res.best_t)),
        _check("oracle<=greedy", res.best_total <= greedy_total, res.best_total, greedy_total),
        _check("oracle<=pipeline", res.best_total <= dec.witness_total, res.best_total, dec.witness_total),
        _check("pipeline<=bound", dec.witness_total <= dec.bound, dec.witness_total, dec.bound),
    ]
    outputs = {
        "best_total": res.best_total,
        "best_S": _point_set_json(res.best_s),
        "best_T": _point_set_json(res.best_t),
        "greedy_total": greedy_total,
        "pipeline_total": dec.witness_total,
        "bound": dec.bound,
    }
    ok = all(c["passed"] for c in checks)
    human = [
        f"oracle: minimum witness total {res.best_total} "
        f"(greedy {greedy_total}, pipeline {dec.witness_total}, bound {dec.bound})",
        _human_checks(checks),
    ]
    report = _report(
        "oracle", _instance_payload(inst, search_cap=args.search_cap, cap=args.cap), outputs, checks
    )
    return report, human, EXIT_OK if ok else EXIT_VERIFY_FAILED


def _cmd_trials(args) -> tuple[dict, list[str], int]:
    if not is_prime(args.q):
        raise ValidationError(f"q = {args.q} is not prime")
    if args.n < 1:
        raise ValidationError(f"n must be >= 1, got {args.n}")
    if not (0.0 <= args.p <= 1.0):
        raise ValidationError(f"inclusion probability must be in [0, 1], got {args.p}")
    rng = random.Random(args.seed)
    points = all_points(args.q, args.n, cap=args.cap).ordered()
    rows = []
    all_ok = True
    worst_total = 0
    for trial in range(args.count):
        s_members = [p for p in points if rng.random() < args.p]
        t_members = [p for p in points if rng.random() < args.p]
        S = PointSet.from_vectors(args.q, args.n, s_members)
        T = PointSet.from_vectors(args.q, args.n, t_members)
        dec = decompose(S, T, args.d, cap=args.cap)
        ok = verify_decomposition(S, T, dec.s_witness, dec.t_witness)
        ok = ok and dec.witness_total <= dec.bound
        oracle_total = None
        if args.oracle and len(S) + len(T) <= args.search_cap:
            res = oracle_min_decomposition(S, T, search_cap=args.search_cap)
            oracle_total = res.best_total
            ok = ok and oracle_total <= dec.witness_total
        all_ok = all_ok and ok
        worst_total = max(worst_total, dec.witness_total)
        row = {
            "trial": trial,
            "sizes": {"S": len(S), "T": len(T), "S+T": len(sumset(S, T))},
            "witness_total": dec.witness_total,
            "ok": ok,
        }
        if oracle_total is not None:
            row["oracle_total"] = oracle_total
        rows.append(row)
    d_used = args.d if args.d is not None else choose_degree(args.q, args.n)[0]
    bound = degree_bound(args.q, args.n, d_used)
    checks = [
        _check("all_trials_verified", all_ok),
        _check("max_witness_total<=bound", worst_total <= bound, worst_total, bound),
    ]
    outputs = {
        "q": args.q,
        "n": args.n,
        "count": args.count,
        "seed": args.seed,
        "p": args.p,
        "degree": d_used,
        "bound": bound,
        "trials": rows,
        "max_witness_total": worst_total,
    }
    human = [
        f"trials: {args.count} random pairs over q={args.q}, n={args.n}, seed={args.seed}",
        f"degree d={d_used}, bound {bound}, max witness total {worst_total}",
        _human_checks(checks),
    ]
    payload = {
        "q": args.q,
        "n": args.n,
        "count": args.count,
        "seed": args.seed,
        "p": args.p,
        "d": args.d,
    }
    report = _report("trials", payload, outputs, checks)
    return report, human, EXIT_OK if all_ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------


def _human_checks(checks: list[dict]) -> str:
    parts = []
    for c in checks:
        tag = "ok" if c["passed"] else "FAIL"
        if "lhs" in c:
            parts.append(f"{c['name']} [{tag}: {c['lhs']} vs {c['rhs']}]")
        else:
            parts.append(f"{c['name']} [{tag}]")
    return "checks: " + "; ".join(parts)


def _instance_payload(inst: ParsedInstance, **extra) -> dict:
    payload = {
        "q": inst.q,
        "n": inst.n,
        "S": _point_set_json(inst.s_set),
        "T": _point_set_json(inst.t_set) if inst.t_set is not None else None,
        "S_order": [list(v.coords) for v in inst.s_order],
        "T_order": [list(v.coords) for v in inst.t_order] if inst.t_order is not None else None,
    }
    payload.update(extra)
    return payload


def _report(command: str, inputs_payload, outputs: dict, checks: list[dict]) -> dict:
    return {
        "command": command,
        "inputs_digest": _digest(inputs_payload),
        "outputs": outputs,
        "checks": checks,
        "ok": all(c["passed"] for c in checks),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sumsetcover",
        description="Witness subsets covering sumsets in F_q^n, with exact certificates.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output only")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_sub(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_text, parents=[common])

    def add_cap(p):
        p.add_argument("--cap", type=int, default=DEFAULT_ENUM_CAP,
                       help="maximum q^n allowed for full-space enumeration")

    p = add_sub("bound", "monomial counts, budgets, and growth")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--growth-to", type=int, default=0, help="also print bound^(1/n) up to this n")
    p.add_argument("--digits", type=int, default=30, help="decimal precision for growth values")
    p.set_defaults(handler=_cmd_bound)

    p = add_sub("decompose", "construct a certified witness pair")
    p.add_argument("--input", required=True, help="instance JSON file")
    p.add_argument("--d", type=int, default=None, help="force the degree instead of minimizing")
    p.add_argument("--output", default=None, help="write the witness pair to this JSON file")
    p.add_argument("--certify-rank", action="store_true",
                   help="also emit per-basis-element rank certificates")
    add_cap(p)
    p.set_defaults(handler=_cmd_decompose)

    p = add_sub("verify", "re-check a witness pair by enumeration")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", required=True, help="JSON file with S_witness and T_witness")
    p.set_defaults(handler=_cmd_verify)

    p = add_sub("symmetric", "witness subset B with B + S = S + S")
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, default=None)
    add_cap(p)
    p.set_defaults(handler=_cmd_symmetric)

    p = add_sub("check-capset", "progression-free size check")
    p.add_argument("--input", required=True)
    add_cap(p)
    p.set_defaults(handler=_cmd_check_capset)

    p = add_sub("check-sumfree", "matching-only sum-free family check")
    p.add_argument("--input", required=True)
    add_cap(p)
    p.set_defaults(handler=_cmd_check_sumfree)

    p = add_sub("oracle", "exhaustive minimum witness total (tiny instances)")
    p.add_argument("--input", required=True)
    p.add_argument("--search-cap", type=int, default=DEFAULT_SEARCH_CAP,
                   help="maximum |S|+|T| for the exhaustive search")
    add_cap(p)
    p.set_defaults(handler=_cmd_oracle)

    p = add_sub("trials", "seeded random instances, decomposed and verified")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=0.5, help="per-point inclusion probability")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--oracle", action="store_true",
                   help="also run the exhaustive oracle when instances are small enough")
    p.add_argument("--search-cap", type=int, default=DEFAULT_SEARCH_CAP)
    add_cap(p)
    p.set_defaults(handler=_cmd_trials)

    return parser


def run_command(argv: list[str]) -> int:
    """Execute one CLI invocation and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return int(code) if isinstance(code, int) else EXIT_INVALID_INPUT
    started = time.perf_counter()
    try:
        report, human, code = args.handler(args)
    except (ParseError, ValidationError, NotPrime, DimensionMismatch, DegreeTooHigh, ValueError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except (EnumerationTooLarge, SearchTooLarge) as exc:
        print(f"error: refused by resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP_REFUSED
    except BoundViolated as exc:
        print(f"error: certified bound violated (bug): {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    report["argv"] = list(argv)
    report["timing_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    _emit(report, human, args.json)
    return code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
