#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Interface en ligne de commande de chebyshev-elim
================================================

Commandes :
    solve   --input F   résout une instance CSV
    verify  --input F   résout puis vérifie (résidu, oracle, boîtes)
    bound   N M         affiche le majorant C(N, M)
    demo                rejoue les deux problèmes de référence

Codes de sortie : 0 succès, 1 erreur d'entrée ou de vérification,
2 refus pour dépassement du budget d'entrées.
"""

import sys
import time
import logging
import argparse
from typing import Any, Dict, List, Optional

from ..core import config
from ..core.config import RunConfig
from ..core.errors import BudgetExceededError, ChebyshevError
from ..core.numeric import get_field
from ..oracle.verify import verify
from ..solver.boxes import Selector, Solution, solve
from ..solver.elimination import EliminationOptions, check_budget, complexity_bound
from ..solver.problem import ProblemInstance
from . import report
from .datasets import REFERENCE_CASES
from .ingest import ingest_csv

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_BUDGET = 2

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def setup_logging(debug: bool = False, log_file: Optional[str] = None) -> None:
    """Configure la journalisation sur stderr (stdout reste réservé au rapport)"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    level_name = str(config.get("general", "log_level")).upper()
    level = logging.DEBUG if debug else getattr(logging, level_name, logging.INFO)
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers, force=True)


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    """Parse les arguments de ligne de commande"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=str, help='Chemin vers un fichier de configuration INI')
    common.add_argument('--debug', action='store_true', help='Active le mode debug')
    common.add_argument('--log-file', type=str, help='Copie du journal dans un fichier')
    common.add_argument('--format', choices=['json', 'text'], dest='output_format', help='Format de sortie')
    common.add_argument('--save-config', type=str,
                        help='Enregistre les réglages effectifs (fichier puis options) dans un fichier INI')

    solver_flags = argparse.ArgumentParser(add_help=False)
    solver_flags.add_argument('--input', required=True, dest='input_path', help='Fichier CSV (X puis Y)')
    solver_flags.add_argument('--selector', type=str,
                              help='lower, midpoint, upper ou valeurs imposées "v1,v2,..."')
    solver_flags.add_argument('--dedupe', action='store_true', default=None,
                              help='Supprime les lignes répétées (au signe près)')
    solver_flags.add_argument('--reorder-columns', action='store_true', default=None,
                              help='Élimine en premier la colonne la plus creuse')
    solver_flags.add_argument('--prune-zero-rows', action='store_true', default=None,
                              help='Supprime toutes les lignes nulles, pas seulement les paires dégénérées')
    solver_flags.add_argument('--strict-degenerate', action='store_true', default=None,
                              help='Refuse les étapes dont la dernière colonne est nulle')
    solver_flags.add_argument('--workers', type=int, help="Nombre de threads pour l'élimination")
    solver_flags.add_argument('--float', action='store_const', const='float', dest='mode',
                              help='Arithmétique flottante approchée')
    solver_flags.add_argument('--epsilon', type=float, help='Tolérance du mode flottant')
    solver_flags.add_argument('--budget', type=int, help="Budget d'entrées (vérifié via C(N, M))")
    solver_flags.add_argument('--override-budget', action='store_true', default=None,
                              help='Ignore le budget')

    parser = argparse.ArgumentParser(
        prog='chebyshev-elim',
        description="Approximation de Tchebychev exacte par élimination de paramètres",
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p_solve = sub.add_parser('solve', parents=[common, solver_flags], help='Résout une instance')
    p_solve.set_defaults(func=cmd_solve)

    p_verify = sub.add_parser('verify', parents=[common, solver_flags], help='Résout puis vérifie')
    p_verify.set_defaults(func=cmd_verify)

    p_bound = sub.add_parser('bound', parents=[common], help='Majorant C(N, M)')
    p_bound.add_argument('n_params', type=int, metavar='N')
    p_bound.add_argument('n_rows', type=int, metavar='M')
    p_bound.set_defaults(func=cmd_bound)

    p_demo = sub.add_parser('demo', parents=[common], help='Problèmes de référence')
    p_demo.add_argument('--dedupe', action='store_true', default=None,
                        help='Active la déduplication (entrées informatives)')
    p_demo.set_defaults(func=cmd_demo)

    return parser.parse_args(argv)


def build_config(args: argparse.Namespace) -> RunConfig:
    """Fusionne la configuration INI et les options de la ligne de commande"""
    selector = Selector.parse(args.selector) if getattr(args, 'selector', None) else None
    return RunConfig.from_settings(
        input_path=getattr(args, 'input_path', None),
        selector=selector.kind if selector else None,
        custom_values=selector.values if selector else None,
        dedupe=getattr(args, 'dedupe', None),
        reorder_columns=getattr(args, 'reorder_columns', None),
        prune_zero_rows=getattr(args, 'prune_zero_rows', None),
        strict_degenerate=getattr(args, 'strict_degenerate', None),
        workers=getattr(args, 'workers', None),
        mode=getattr(args, 'mode', None),
        epsilon=getattr(args, 'epsilon', None),
        budget=getattr(args, 'budget', None),
        override_budget=getattr(args, 'override_budget', None),
        output_format=args.output_format,
    )


def _options(run: RunConfig) -> EliminationOptions:
    return EliminationOptions(
        dedupe=run.dedupe,
        prune_zero_rows=run.prune_zero_rows,
        strict_degenerate=run.strict_degenerate,
        workers=run.workers,
    )


def _selector(run: RunConfig) -> Selector:
    return Selector(run.selector, run.custom_values)


def _emit(run: RunConfig, payload: Dict[str, Any], text: str) -> None:
    print(report.to_json(payload) if run.output_format == 'json' else text)


def _load(run: RunConfig) -> ProblemInstance:
    problem = ingest_csv(run.input_path, get_field(run.mode, run.epsilon))
    run.validate(problem.n_params)
    if not run.override_budget:
        check_budget(problem.n_params, problem.n_rows, run.budget)
    return problem


def _refuse(run: RunConfig, error: BudgetExceededError) -> int:
    logger.error(str(error))
    payload = {
        "error": "budget",
        "message": str(error),
        "bound": str(error.bound),
        "budget": error.budget,
    }
    _emit(run, payload, str(error))
    return EXIT_BUDGET


def _solve(run: RunConfig, problem: ProblemInstance) -> Solution:
    return solve(problem, _selector(run), _options(run), reorder_columns=run.reorder_columns)


def cmd_solve(run: RunConfig) -> int:
    """Résout l'instance et affiche mu, theta, les boîtes et le nombre d'entrées"""
    try:
        problem = _load(run)
        start = time.perf_counter()
        solution = _solve(run, problem)
        elapsed_ms = (time.perf_counter() - start) * 1000
    except BudgetExceededError as e:
        return _refuse(run, e)
    except ChebyshevError as e:
        logger.error(f"Erreur lors de la résolution: {str(e)}")
        return EXIT_FAILURE
    payload = report.solution_payload(solution, elapsed_ms)
    _emit(run, payload, report.solution_text(payload))
    return EXIT_OK


def cmd_verify(run: RunConfig) -> int:
    """Résout puis vérifie la solution ; 0 si tous les contrôles exécutés réussissent"""
    try:
        problem = _load(run)
        solution = _solve(run, problem)
        result = verify(problem, solution, run.oracle_max_unknowns, run.oracle_max_rows)
    except BudgetExceededError as e:
        return _refuse(run, e)
    except ChebyshevError as e:
        logger.error(f"Erreur lors de la vérification: {str(e)}")
        return EXIT_FAILURE
    _emit(run, result.to_dict(), report.verification_text(result))
    return EXIT_OK if result.passed else EXIT_FAILURE


def cmd_bound(run: RunConfig, n_params: int, n_rows: int) -> int:
    """Affiche la valeur exacte de C(N, M)"""
    try:
        bound = complexity_bound(n_params, n_rows)
    except ChebyshevError as e:
        logger.error(f"Erreur de paramètres: {str(e)}")
        return EXIT_FAILURE
    _emit(run, {"n": n_params, "m": n_rows, "bound": str(bound)}, str(bound))
    return EXIT_OK


def run_demo(dedupe: bool = False) -> List[Dict[str, Any]]:
    """Résout les problèmes de référence et compare aux valeurs attendues"""
    options = EliminationOptions(dedupe=dedupe)
    rows = []
    for case in REFERENCE_CASES:
        start = time.perf_counter()
        solution = solve(case.problem(), Selector(), options)
        elapsed_ms = (time.perf_counter() - start) * 1000
        mu_ok = solution.mu == case.mu
        theta_ok = solution.theta == case.theta
        entries_ok = solution.entries == case.entries
        rows.append({
            "name": case.name,
            "expected": {
                "mu": str(case.mu),
                "theta": [str(v) for v in case.theta],
                "entries": case.entries,
            },
            "computed": {
                "mu": str(solution.mu),
                "theta": [str(v) for v in solution.theta],
                "entries": solution.entries,
            },
            "entries_checked": not dedupe,
            "passed": mu_ok and theta_ok and (entries_ok or dedupe),
            "elapsed_ms": round(elapsed_ms, 3),
        })
        logger.info(f"{case.name} : {'PASS' if rows[-1]['passed'] else 'FAIL'} en {elapsed_ms:.0f} ms")
    return rows


def cmd_demo(run: RunConfig, dedupe: bool = False) -> int:
    """Rejoue les deux problèmes de référence ; 0 si tout concorde exactement"""
    try:
        rows = run_demo(dedupe)
    except ChebyshevError as e:
        logger.error(f"Erreur lors de la démonstration: {str(e)}")
        return EXIT_FAILURE
    passed = all(row["passed"] for row in rows)
    _emit(run, {"cases": rows, "passed": passed}, report.demo_text(rows))
    return EXIT_OK if passed else EXIT_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    """Fonction principale"""
    args = parse_arguments(argv)
    if args.config and not config.initialize(args.config):
        setup_logging(args.debug, args.log_file)
        logger.error(f"Impossible de charger la configuration {args.config}")
        return EXIT_FAILURE
    setup_logging(args.debug, args.log_file)

    try:
        run = build_config(args)
    except ChebyshevError as e:
        logger.error(f"Configuration invalide: {str(e)}")
        return EXIT_FAILURE

    logger.debug(f"Réglages chargés : {config.get_all()}")

    if args.save_config and not config.save_run(run, args.save_config):
        logger.error(f"Impossible d'enregistrer la configuration dans {args.save_config}")
        return EXIT_FAILURE

    if args.command == 'bound':
        return cmd_bound(run, args.n_params, args.n_rows)
    if args.command == 'demo':
        return cmd_demo(run, bool(args.dedupe))
    return args.func(run)


if __name__ == "__main__":
    sys.exit(main())
