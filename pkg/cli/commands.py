"""Command implementations for the liequiver command line.

Every ``cmd_*`` function takes the parsed arguments and returns a process
exit code: 0 on success, 1 when a verification mismatch was found. Domain
errors propagate as LieQuiverError and are mapped to exit code 2 by ``run``.
"""

import itertools
import logging
import random
import sys
from multiprocessing import Pool
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from config.settings import (
    APP_NAME, INTERVAL_VERTEX_CAP, KOSZUL_EXTRA_DEGREES, LOG_FORMAT, LOG_LEVEL,
)
from models import (
    JobConfig, LatticeBox, LieQuiverError, LieQuiverErrorType, PsiSet, QuiverGraph,
    Weight, parse_sides,
)
from services import (
    QuiverService, cartan_matrix, down_set_algebra, enumerate_extremal, extremal_witness, family_relations,
    gamma_amn, gamma_t, graded_dims, interval_algebra, is_extremal, is_generic,
    is_regular, koszul_dual_space, n_eta, numerical_koszulity, parse_psi, positive_roots,
    projective_dimensions, psi_from_json, relation_space, relation_space_oracle, root_system,
    up_set_algebra, verify_adapted, xi_a, xi_canonical_class, xi_count,
)
from services.export import to_dot, to_json, vertex_name, write_component_dots, write_text
from services.linalg import same_span
from services.oracle import report
from .parser import lie_type_from, parse_args, parse_ints, parse_weight, parse_window

logger = logging.getLogger(__name__)

ERROR_MESSAGES = {
    LieQuiverErrorType.INVALID_INPUT: "Invalid input",
    LieQuiverErrorType.NOT_A_ROOT: "Not a root",
    LieQuiverErrorType.NOT_EXTREMAL: "Root set is not extremal",
    LieQuiverErrorType.NOT_REGULAR: "Root set is not regular",
    LieQuiverErrorType.NOT_INTERVAL_CLOSED: "Vertex set is not interval-closed",
    LieQuiverErrorType.UNSUPPORTED_CASE: "Unsupported case",
    LieQuiverErrorType.ZERO_DENOMINATOR: "Zero denominator",
    LieQuiverErrorType.CAP_EXCEEDED: "Computation cap exceeded",
    LieQuiverErrorType.ORACLE_FAILURE: "Oracle failure",
    LieQuiverErrorType.UNKNOWN: "An error occurred",
}


def configure_logging(verbosity: int):
    """Configure the root logger once for the process."""
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, LOG_LEVEL)
    logging.basicConfig(format=LOG_FORMAT, level=level, stream=sys.stderr)


def _emit(args, payload, text_lines: Sequence[str]):
    """Print text or JSON and write the JSON file when -o is given."""
    if getattr(args, "output", None):
        write_text(args.output, to_json(payload))
    if getattr(args, "json", False):
        sys.stdout.write(to_json(payload))
    else:
        for line in text_lines:
            print(line)


def _psi(args) -> PsiSet:
    lie_type = lie_type_from(args)
    psi = parse_psi(lie_type, args.psi)
    if not is_extremal(lie_type, psi.roots):
        raise LieQuiverError(LieQuiverErrorType.NOT_EXTREMAL, f"{psi} is not extremal in {lie_type}")
    return psi


def _box(low: Weight, high: Weight) -> List[Weight]:
    ranges = [range(a, b + 1) for a, b in zip(low.coords, high.coords)]
    return [Weight(c) for c in itertools.product(*ranges)]


# Root data


def cmd_roots(args) -> int:
    lie_type = lie_type_from(args)
    roots = positive_roots(lie_type)
    payload = {
        "type": str(lie_type),
        "cartan": cartan_matrix(lie_type),
        "roots": [
            {"label": list(r.label), "simple": list(r.simple), "weight": r.weight.to_list()}
            for r in roots
        ],
    }
    lines = [f"{lie_type}: {len(roots)} positive roots"]
    lines += [f"  {r}  simple={list(r.simple)}  weight={r.weight}" for r in roots]
    _emit(args, payload, lines)
    return 0


def cmd_extremal(args) -> int:
    lie_type = lie_type_from(args)
    if args.psi:
        psi = parse_psi(lie_type, args.psi)
        extremal = is_extremal(lie_type, psi.roots)
        payload = {"psi": psi.to_dict(), "extremal": extremal, "regular": is_regular(psi)}
        lines = [f"{psi}: {'extremal' if extremal else 'not extremal'}"]
        if args.witness and extremal:
            witness = extremal_witness(lie_type, psi.roots)
            payload["witness"] = list(witness)
            lines.append(f"  witness {[str(c) for c in witness]}")
        _emit(args, payload, lines)
        return 0
    found = enumerate_extremal(lie_type)
    payload = {"type": str(lie_type), "sets": [p.to_dict() for p in found]}
    lines = [f"{lie_type}: {len(found)} extremal sets"]
    lines += [f"  {p}{'  regular' if is_regular(p) else ''}" for p in found]
    _emit(args, payload, lines)
    return 0


# Quivers


def _delta(args, psi: PsiSet) -> QuiverGraph:
    rank = psi.lie_type.rank
    service = QuiverService(psi, vertex_cap=getattr(args, "vertex_cap", INTERVAL_VERTEX_CAP))
    if args.window:
        low, high = parse_window(args.window, rank)
        vertices = [w for w in _box(low, high) if w.is_dominant()]
        return service.build_delta(vertices, check_closed=False)
    if getattr(args, "interval", None):
        mu, nu = parse_window(args.interval, rank)
        return service.build_delta(service.interval(mu, nu))
    if args.down:
        return service.build_delta(service.down_set(parse_weight(args.down, rank)))
    return service.build_delta(service.up_set(parse_weight(args.up, rank), args.depth), check_closed=False)


def _quiver_lines(quiver: QuiverGraph) -> List[str]:
    parts = quiver.components()
    lines = [f"{len(quiver.vertices)} vertices, {len(quiver.arrows)} arrows, {len(parts)} components"]
    lines.append("sinks: " + " ".join(f"({vertex_name(v)})" for v in quiver.sinks()))
    lines.append("sources: " + " ".join(f"({vertex_name(v)})" for v in quiver.sources()))
    for arrow in quiver.arrows:
        label = f"  {arrow.label}" if arrow.label is not None else ""
        lines.append(f"  ({vertex_name(arrow.target)}) <- ({vertex_name(arrow.source)}){label}")
    return lines


def cmd_quiver(args) -> int:
    psi = _psi(args)
    quiver = _delta(args, psi)
    if args.dot:
        for path in write_component_dots(quiver, args.dot, f"Delta_{psi.lie_type}"):
            logger.info("DOT written to %s", path)
    payload = {"psi": psi.to_dict(), "quiver": quiver, "components": len(quiver.components())}
    _emit(args, payload, _quiver_lines(quiver))
    return 0


def cmd_families(args) -> int:
    window = parse_ints(args.window, "window") if args.window else None
    if args.gamma_t is not None:
        quiver = gamma_t(args.gamma_t)
        payload = {"quiver": quiver}
    elif args.xi:
        m = parse_sides(args.xi)
        if args.count:
            m = LatticeBox(m).clipped(window).m
            count = xi_count(m, args.parity)
            _emit(args, {"m": list(m), "a": args.parity, "count": count}, [str(count)])
            return 0
        quiver = xi_a(m, args.parity, window)
        payload = {"m": list(LatticeBox(m).clipped(window).m), "a": args.parity, "quiver": quiver}
        if args.classify:
            payload["class"] = list(xi_canonical_class(m, args.parity))
    else:
        if ";" not in args.gamma:
            raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, "--gamma expects m;n")
        m_text, n_text = args.gamma.split(";", 1)
        m, n = parse_sides(m_text), parse_sides(n_text)
        quiver = gamma_amn(args.parity, m, n, window)
        payload = {"m": list(m), "n": list(n), "a": args.parity, "quiver": quiver,
                   "connected": quiver.is_connected()}
    if args.count:
        _emit(args, {"count": len(quiver.vertices)}, [str(len(quiver.vertices))])
        return 0
    if args.dot:
        write_text(args.dot, to_dot(quiver, "family"))
    lines = _quiver_lines(quiver)
    if "class" in payload:
        lines.insert(0, f"class {payload['class']}")
    _emit(args, payload, lines)
    return 0


# Relations


def _space_lines(space) -> List[str]:
    labels = [str(p.labels[0]) for p in space.paths]
    lines = [f"lam={space.lam} eta={list(space.eta)} case={space.case} t={space.t} "
             f"relations={space.dimension} generic={space.generic}"]
    if labels:
        lines.append("  paths by first step: " + " ".join(labels))
    for vec in space.basis:
        lines.append("  " + " ".join(str(c) for c in vec.coeffs))
    return lines


def _family_lines(relations) -> List[str]:
    lines = [f"{len(relations)} relations"]
    for vec in relations:
        terms = " ".join(f"{c}*{p.labels[0]}{p.labels[1]}" for p, c in zip(vec.paths, vec.coeffs) if c)
        lines.append(f"  {vec.target} <- {vec.source}: {terms}")
    return lines


def cmd_family_relations(args, psi: PsiSet, lam: Weight) -> int:
    window = parse_weight(args.family, psi.lie_type.rank)
    relations = family_relations(psi, lam, window)
    payload = {
        "psi": psi.to_dict(),
        "relations": [
            {"target": vec.target, "source": vec.source,
             "paths": [[list(s) for s in p.labels] for p in vec.paths],
             "coefficients": list(vec.coeffs)}
            for vec in relations
        ],
    }
    _emit(args, payload, _family_lines(relations))
    return 0


def cmd_relations(args) -> int:
    psi = _psi(args)
    rank = psi.lie_type.rank
    lam = parse_weight(args.lam, rank)
    if args.family:
        return cmd_family_relations(args, psi, lam)
    eta = parse_ints(args.eta, "eta")
    if len(eta) != rank:
        raise LieQuiverError(LieQuiverErrorType.INVALID_INPUT, f"eta needs {rank} simple-root coordinates")
    normalize = not args.raw
    if args.oracle:
        space = relation_space_oracle(psi, lam, eta, normalize)
        space.generic = is_generic(space.basis, space.t)
    else:
        space = relation_space(psi, lam, eta, normalize)
    payload = {"psi": psi.to_dict(), "space": space}
    lines = _space_lines(space)
    if is_regular(psi):
        form = n_eta(psi, eta)
        payload["n_eta"] = str(form) if form is not None else None
        lines.append(f"  non-generic locus: {form} = 0" if form is not None else "  non-generic locus: empty")
    if args.dual:
        dual = koszul_dual_space(space)
        payload["dual"] = [list(v.coeffs) for v in dual]
        lines.append(f"  dual relations: {len(dual)}")
        lines += ["  " + " ".join(str(c) for c in v.coeffs) for v in dual]
    _emit(args, payload, lines)
    return 0


# Verification grid


def _check_instance(task: Tuple[dict, Tuple[int, ...], Tuple[int, ...], int, bool, bool]) -> dict:
    """Compare closed form and oracle for one (lam, eta); runs in worker processes."""
    psi_data, coords, eta, cap, normalize, adapted = task
    psi = psi_from_json(psi_data)
    lam = Weight(coords)
    instance = {"lambda": list(coords), "eta": list(eta)}
    try:
        return _compare_instance(psi, lam, eta, cap, normalize, adapted, instance)
    except LieQuiverError as e:
        # an oracle module over the cap is skipped, not failed
        if e.error_type == LieQuiverErrorType.CAP_EXCEEDED:
            return report(instance, "capped", {}, True, {"error": str(e)})
        return report(instance, "error", {}, False, {"error": str(e)})


def _compare_instance(psi: PsiSet, lam: Weight, eta: Tuple[int, ...], cap: int, normalize: bool,
                      adapted: bool, instance: dict) -> dict:
    closed = relation_space(psi, lam, eta, normalize)
    oracle = relation_space_oracle(psi, lam, eta, normalize, cap)
    dims = {"t": closed.t, "closed": closed.dimension, "oracle": oracle.dimension}
    details: Dict = {}
    passed = closed.dimension == oracle.dimension and same_span(closed.matrix(), oracle.matrix())
    if not passed:
        details["closed"] = closed.matrix()
        details["oracle"] = oracle.matrix()
    if is_regular(psi) and closed.t:
        form = n_eta(psi, eta)
        expected = form is None or form.evaluate(lam) != 0
        if closed.generic != expected:
            passed = False
            details["generic"] = {"closed": closed.generic, "expected": expected}
    if adapted:
        for beta in psi:
            if QuiverService(psi).has_arrow(lam, beta) and not verify_adapted(psi, beta, lam, cap):
                passed = False
                details.setdefault("adapted", []).append(list(beta.label))
    return report(instance, closed.case, dims, passed, details)


def verification_tasks(psi: PsiSet, config: JobConfig, sample: Optional[int] = None,
                       adapted: bool = False) -> List[Tuple]:
    """All (lam, eta) instances on the grid lam(h_i) <= lambda_max, in sorted order."""
    rank = psi.lie_type.rank
    weights = [Weight(c) for c in itertools.product(range(config.lambda_max + 1), repeat=rank)]
    if sample is not None and sample < len(weights):
        weights = sorted(random.Random(config.seed).sample(weights, sample), key=lambda w: w.coords)
    sums = QuiverService(psi).sums()
    data = psi.to_dict()
    return [
        (data, lam.coords, eta, config.module_cap, config.normalize, adapted)
        for lam in weights for eta in sums
    ]


def run_verification(tasks: Sequence[Tuple], jobs: int = 1,
                     progress: Optional[Callable[[int, int], None]] = None) -> List[dict]:
    """Check every task, in parallel when jobs > 1; results keep task order."""
    if jobs <= 1:
        results = []
        for k, task in enumerate(tasks, start=1):
            results.append(_check_instance(task))
            if progress:
                progress(k, len(tasks))
        return results
    with Pool(jobs) as pool:
        return pool.map(_check_instance, tasks)


def cmd_verify(args) -> int:
    psi = _psi(args)
    config = JobConfig(
        lie_type=psi.lie_type, psi_spec=args.psi, lambda_max=args.lmax,
        module_cap=args.module_cap, jobs=args.jobs, seed=args.seed,
        json_output=args.json, output=args.output,
    )
    tasks = verification_tasks(psi, config, args.sample, args.adapted)
    logger.info("Verifying %d instances for %s with %d jobs", len(tasks), psi, config.jobs)
    results = run_verification(tasks, config.jobs)
    failures = [r for r in results if not r["pass"]]
    cases: Dict[str, int] = {}
    for r in results:
        cases[r["case"]] = cases.get(r["case"], 0) + 1
    capped = cases.get("capped", 0)
    payload = {"psi": psi.to_dict(), "instances": len(results), "failures": len(failures),
               "capped": capped, "cases": cases, "results": results}
    lines = [f"{psi}: {len(results)} instances, {len(failures)} failures, {capped} capped"]
    lines += [f"  {case}: {count}" for case, count in sorted(cases.items())]
    for r in failures:
        lines.append(f"  FAIL lambda={r['instance']['lambda']} eta={r['instance']['eta']} "
                     f"case={r['case']} {r['details']}")
    _emit(args, payload, lines)
    return 1 if failures else 0


# Algebras


def _algebra(args, psi: PsiSet):
    rank = psi.lie_type.rank
    if args.window:
        mu, nu = parse_window(args.window, rank)
        return interval_algebra(psi, mu, nu)
    if args.down:
        return down_set_algebra(psi, parse_weight(args.down, rank))
    return up_set_algebra(psi, parse_weight(args.up, rank), args.depth)


def cmd_koszul(args) -> int:
    psi = _psi(args)
    algebra = _algebra(args, psi)
    degree = args.degree if args.degree is not None else len(psi) + KOSZUL_EXTRA_DEGREES
    koszul = numerical_koszulity(algebra, degree)
    dims = projective_dimensions(algebra)
    gldim = max(dims.values()) if dims else 0
    hilbert = graded_dims(algebra, degree)
    payload = {
        "algebra": algebra.name,
        "vertices": len(algebra.quiver.vertices),
        "arrows": len(algebra.quiver.arrows),
        "relations": algebra.relation_count,
        "koszul": koszul,
        "global_dimension": gldim,
        "projective_dimensions": {vertex_name(v): d for v, d in dims.items()},
        "hilbert_totals": [hilbert.total(d) for d in range(degree + 1)],
    }
    lines = [
        f"{algebra.name}: {payload['vertices']} vertices, {payload['arrows']} arrows, "
        f"{payload['relations']} relations",
        f"  numerically Koszul to degree {degree}: {koszul}",
        f"  global dimension {gldim} (|Psi| = {len(psi)})",
        "  graded dimensions " + " ".join(str(x) for x in payload["hilbert_totals"]),
    ]
    _emit(args, payload, lines)
    return 0


def cmd_export(args) -> int:
    psi = _psi(args)
    mu, nu = parse_window(args.window, psi.lie_type.rank)
    algebra = interval_algebra(psi, mu, nu)
    quiver = algebra.quiver
    written = []
    if args.dot:
        written += [str(p) for p in write_component_dots(quiver, args.dot, f"Delta_{psi.lie_type}")]
    if args.relations:
        service = QuiverService(psi)
        present = set(quiver.vertices)
        spaces = []
        for lam in quiver.vertices:
            for eta in service.sums():
                if lam + root_system(psi.lie_type).weight_of(eta) in present:
                    space = relation_space(psi, lam, eta)
                    if space.t:
                        spaces.append(space)
        written.append(str(write_text(args.relations, to_json({"psi": psi.to_dict(), "spaces": spaces}))))
    if args.hilbert:
        written.append(str(write_text(args.hilbert, to_json(graded_dims(algebra, args.degree)))))
    payload = {"psi": psi.to_dict(), "quiver": quiver, "written": written}
    _emit(args, payload, [f"wrote {path}" for path in written] or _quiver_lines(quiver))
    return 0


COMMANDS = {
    "roots": cmd_roots,
    "extremal": cmd_extremal,
    "quiver": cmd_quiver,
    "families": cmd_families,
    "relations": cmd_relations,
    "verify": cmd_verify,
    "koszul": cmd_koszul,
    "export": cmd_export,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, dispatch, and map errors to exit codes."""
    args = parse_args(list(argv) if argv is not None else None)
    configure_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except LieQuiverError as e:
        heading = ERROR_MESSAGES.get(e.error_type, "An error occurred")
        print(f"{APP_NAME}: {heading}: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        wrapped = LieQuiverError(LieQuiverErrorType.UNKNOWN, f"Unexpected error: {str(e)}")
        logger.debug("Unexpected error", exc_info=True)
        print(f"{APP_NAME}: {wrapped}", file=sys.stderr)
        return 2
