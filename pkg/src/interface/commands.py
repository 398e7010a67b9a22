import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, TextIO, Tuple

import pandas as pd

from core.graph import Graph, GraphError
from decompose.classify import classify
from exact.audit import InequalityChainError, inequality_audit
from exact.brute import chi_proper, chi_s_brute
from exact.labeling import chi_s_labeling
from exact.search import BudgetExhausted, SearchBudget, SolverInputError
from exact.tightness import tightness_report
from generators.families import GeneratorError, GeneratorSpec, generate, uop
from interface.reports import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_REJECT,
    EXIT_UNEXPECTED,
    EXIT_UNSUPPORTED,
    EXIT_USAGE,
    RunReport,
    digest,
    write_bytes,
    write_json,
)
from orienter.outerplanar import build_graph_orientation
from orienter.plan import OrientationError, UnsupportedClassError
from processing.graph_parser import (
    GraphFormatError,
    StructuralMismatchError,
    parse_graph,
    parse_orientation,
    serialize_graph,
    serialize_orientation,
)
from processing.orientation_validator import validate

logger = logging.getLogger(__name__)

# Family parameter set by the generic --param flag
PRIMARY_PARAMETER = {
    "uop": "k",
    "random_cactus": "blocks",
    "random_maximal_outerplanar": "n",
    "random_graph": "n",
    "random_tree": "n",
    "cycle": "n",
    "path": "n",
    "complete": "n",
    "star": "leaves",
    "book": "p",
}


class CommandError(Exception):
    def __init__(self, message: str, exit_code: int):
        super().__init__(message)
        self.exit_code = exit_code


class SemiproperCommands:
    """Handlers for the ``semiproper`` subcommands; each returns an exit code."""

    def __init__(self, stdout: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.handlers = self._initialize_handlers()

    def _initialize_handlers(self):
        return {
            "gen": self.cmd_gen,
            "classify": self.cmd_classify,
            "orient": self.cmd_orient,
            "exact": self.cmd_exact,
            "validate": self.cmd_validate,
            "audit": self.cmd_audit,
            "tightness": self.cmd_tightness,
            "sweep": self.cmd_sweep,
        }

    def run(self, args) -> int:
        started = time.monotonic()
        try:
            report = self.handlers[args.command](args)
        except CommandError as e:
            logger.error(str(e))
            return e.exit_code
        except (GraphFormatError, GeneratorError, SolverInputError, FileNotFoundError) as e:
            logger.error(f"{args.command}: {e}")
            return EXIT_USAGE
        except UnsupportedClassError as e:
            logger.error(f"{args.command}: unsupported class: {e}")
            return EXIT_UNSUPPORTED
        except Exception as e:
            logger.error(f"{args.command} failed: {e}")
            return EXIT_UNEXPECTED

        if getattr(args, "timing", False):
            report.timing = {"elapsed_seconds": round(time.monotonic() - started, 6)}
        self.stdout.write(report.render())
        return report.outputs.get("exit_code", EXIT_OK)

    # Helpers

    def _read_graph(self, path: str) -> Tuple[Graph, bytes]:
        data = Path(path).read_bytes()
        return parse_graph(data), data

    def _echo(self, args) -> Dict[str, Any]:
        skipped = {"func", "verbose", "timing"}
        return {k: v for k, v in sorted(vars(args).items()) if k not in skipped}

    def _generator_spec(self, args) -> GeneratorSpec:
        family = args.family.replace("-", "_")
        params: Dict[str, float] = {}
        if args.param is not None:
            if family not in PRIMARY_PARAMETER:
                raise GeneratorError(f"family {args.family} takes no --param")
            params[PRIMARY_PARAMETER[family]] = args.param
        for name in ("blocks", "max_cycle", "edge_probability", "edges"):
            value = getattr(args, name, None)
            if value is not None:
                params["m" if name == "edges" else name] = value
        return GeneratorSpec.of(family, args.seed, **params)

    # Subcommands

    def cmd_gen(self, args) -> RunReport:
        spec = self._generator_spec(args)
        generated = generate(spec)
        data = serialize_graph(generated.graph)
        outputs: Dict[str, Any] = {"metadata": generated.metadata}
        if args.output:
            write_bytes(args.output, data)
            write_json(f"{args.output}.json", generated.metadata)
            outputs["graph_file"] = args.output
            outputs["metadata_file"] = f"{args.output}.json"
        else:
            outputs["graph"] = data.decode("ascii")
        logger.info(f"Generated {generated.metadata['family']} graph: {generated.graph.vertex_count} vertices")
        return RunReport(command="gen", arguments=self._echo(args),
                         input_digest=digest(spec.model_dump_json().encode("utf-8")), outputs=outputs)

    def cmd_classify(self, args) -> RunReport:
        g, data = self._read_graph(args.input)
        result = classify(g)
        return RunReport(command="classify", arguments=self._echo(args), input_digest=digest(data),
                         outputs=result.to_dict())

    def cmd_orient(self, args) -> RunReport:
        g, data = self._read_graph(args.input)
        orientation, plan = build_graph_orientation(g, args.construction)

        verdict = validate(g, orientation, mu_bound=plan.bound, weight_domain=(1, 2))
        if not verdict["is_valid"]:
            raise OrientationError(f"constructed orientation failed validation: {verdict['errors'][:3]}", plan.trace)

        encoded = serialize_orientation(orientation)
        outputs: Dict[str, Any] = plan.to_dict()
        if not args.trace:
            del outputs["trace"]
        outputs.update(
            mu=orientation.mu,
            weight_two_arcs=orientation.weight_two_count(),
            labels=plan.labels(),
        )
        if args.output:
            write_bytes(args.output, encoded)
            outputs["orientation_file"] = args.output
        else:
            outputs["orientation"] = encoded.decode("ascii")
        return RunReport(command="orient", arguments=self._echo(args), input_digest=digest(data), outputs=outputs)

    def cmd_exact(self, args) -> RunReport:
        g, data = self._read_graph(args.input)
        budget = SearchBudget(args.budget_secs, args.budget_nodes)
        if args.method == "brute":
            domain = (1, 2) if args.weight_domain == 2 else (1, 2, 3)
            result = chi_s_brute(g, domain, args.mu_cap, budget, args.workers)
        elif args.method == "labeling":
            if args.workers != 1:
                raise CommandError("--workers applies to the brute and proper methods only", EXIT_USAGE)
            result = chi_s_labeling(g, args.mu_cap, budget)
        else:
            result = chi_proper(g, args.mu_cap, budget, args.workers)

        outputs = result.to_dict(timing=args.timing)
        if result.budget_exhausted:
            outputs["exit_code"] = EXIT_BUDGET
        return RunReport(command="exact", arguments=self._echo(args), input_digest=digest(data), outputs=outputs)

    def cmd_validate(self, args) -> RunReport:
        g, graph_data = self._read_graph(args.graph)
        orientation_data = Path(args.orientation).read_bytes()
        domain = None if args.weight_domain is None else tuple(range(1, args.weight_domain + 1))
        try:
            orientation = parse_orientation(orientation_data, g)
            verdict = validate(g, orientation, mu_bound=args.mu, weight_domain=domain)
        except (StructuralMismatchError, GraphError) as e:
            if isinstance(e, GraphFormatError):
                raise
            verdict = {"is_valid": False, "errors": [str(e)], "warnings": [], "violations": []}

        outputs = dict(verdict)
        if not verdict["is_valid"]:
            outputs["exit_code"] = EXIT_REJECT
        return RunReport(command="validate", arguments=self._echo(args),
                         input_digest=digest(graph_data, orientation_data), outputs=outputs)

    def cmd_audit(self, args) -> RunReport:
        g, data = self._read_graph(args.input)
        budget = SearchBudget(args.budget_secs, args.budget_nodes)
        try:
            outputs = inequality_audit(g, budget).to_dict()
        except InequalityChainError as e:
            outputs = {"holds": False, "error": str(e), "exit_code": EXIT_REJECT}
        except BudgetExhausted as e:
            logger.warning(f"audit: {e}")
            outputs = {"holds": None, "budget_exhausted": True, "nodes": e.nodes,
                       "error": str(e), "exit_code": EXIT_BUDGET}
        return RunReport(command="audit", arguments=self._echo(args), input_digest=digest(data), outputs=outputs)

    def cmd_tightness(self, args) -> RunReport:
        g, graph_data = self._read_graph(args.graph)
        orientation_data = Path(args.orientation).read_bytes()
        orientation = parse_orientation(orientation_data, g)
        classes = None
        if args.uop is not None:
            reference, metadata = uop(args.uop)
            if reference.canonical() != g.canonical():
                raise CommandError(f"graph is not the universal outerplanar graph of order {args.uop}", EXIT_USAGE)
            classes = metadata["classes"]
        outputs = tightness_report(orientation, classes).to_dict()
        return RunReport(command="tightness", arguments=self._echo(args),
                         input_digest=digest(graph_data, orientation_data), outputs=outputs)

    def cmd_sweep(self, args) -> RunReport:
        rows: List[Dict[str, Any]] = []
        labels = set()
        for seed in range(args.seed, args.seed + args.count):
            spec = self._generator_spec(_SeedView(args, seed))
            g = generate(spec).graph
            row: Dict[str, Any] = {"seed": seed, "vertices": g.vertex_count, "edges": g.edge_count}
            try:
                orientation, plan = build_graph_orientation(g)
                bound = plan.bound
                verdict = validate(g, orientation, mu_bound=bound, weight_domain=(1, 2))
                labels.update(plan.labels())
                row.update(cls=plan.graph_class.tag.value, mu=orientation.mu, bound=bound,
                           valid=verdict["is_valid"], error="")
            except (UnsupportedClassError, OrientationError) as e:
                row.update(cls="unsupported" if isinstance(e, UnsupportedClassError) else "error",
                           mu=-1, bound=-1, valid=False, error=str(e))
            rows.append(row)

        table = pd.DataFrame(rows, columns=["seed", "vertices", "edges", "cls", "mu", "bound", "valid", "error"])
        table = table.rename(columns={"cls": "class"})
        if args.output_csv:
            Path(args.output_csv).parent.mkdir(parents=True, exist_ok=True)
            table.to_csv(args.output_csv, index=False, lineterminator="\n")

        failures = [row["seed"] for row in rows if not row["valid"]]
        outputs: Dict[str, Any] = {
            "family": args.family.replace("-", "_"),
            "graphs": int(len(table)),
            "max_mu": int(table["mu"].max()) if len(table) else 0,
            "classes": {k: int(v) for k, v in sorted(table["class"].value_counts().items())},
            "failures": [int(s) for s in failures],
            "case_labels": sorted(labels),
        }
        if failures:
            outputs["exit_code"] = EXIT_REJECT
        return RunReport(command="sweep", arguments=self._echo(args), outputs=outputs)


class _SeedView:
    """Generator arguments of a sweep with the seed replaced."""

    def __init__(self, args, seed: int):
        self._args = args
        self.seed = seed

    def __getattr__(self, name):
        return getattr(self._args, name)
