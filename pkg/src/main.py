#!/usr/bin/env python3
"""
semiproper - Semi-proper orientations of cacti and outerplanar graphs
Constructive orientations, exact solvers, generators and a validator.
"""

import os
import sys
import logging
import argparse
from typing import List, Optional

# Add the package root (for config) and src to the Python path
sys.path.append(os.path.join(os.path.dirname(__file__), '..'))
sys.path.append(os.path.dirname(__file__))

from config.settings import settings, defaults
from interface.commands import SemiproperCommands


def setup_logging(verbose: bool = False):
    """Configure application logging (stderr only, stdout carries reports)"""
    log_level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper(), logging.INFO)

    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.log_file:
        handlers.append(logging.FileHandler(settings.log_file, mode='a', encoding='utf-8'))

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


def _generator_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--family', required=True,
                        help='uop, cactus-tight, random-cactus, random-maximal-outerplanar, '
                             'random-graph, random-tree, cycle, path, complete, star, book')
    parser.add_argument('--param', type=int, help='Main size parameter of the family (k, n, p, leaves or blocks)')
    parser.add_argument('--blocks', type=int, help='Number of blocks (random-cactus)')
    parser.add_argument('--max-cycle', type=int, help='Longest cycle block (random-cactus)')
    parser.add_argument('--edge-probability', type=float, help='Chance a block is a bridge (random-cactus)')
    parser.add_argument('-m', '--edges', type=int, help='Number of edges (random-graph)')
    parser.add_argument('--seed', type=int, default=defaults.generators.seed,
                        help='PRNG seed (default: 0)')


def parse_arguments(argv: Optional[List[str]] = None):
    """Parse command line arguments"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', '-v', action='store_true', help='Enable verbose logging')
    common.add_argument('--timing', action='store_true', help='Include elapsed times in the report')

    parser = argparse.ArgumentParser(
        prog='semiproper',
        description="semiproper - Semi-proper orientations with bounded in-weight",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Universal outerplanar graph of order 4, then orient it
  semiproper gen --family uop --param 4 -o uop4.el
  semiproper orient -i uop4.el -o uop4.orn

  # Exact semi-proper orientation number of the tight cactus
  semiproper gen --family cactus-tight -o tight.el
  semiproper exact -i tight.el --method brute

  # Check an orientation against an in-weight bound
  semiproper validate -g tight.el -d tight.orn --mu 3
        """
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {settings.app_version}')
    sub = parser.add_subparsers(dest='command', required=True)

    gen = sub.add_parser('gen', parents=[common], help='Generate a graph family member')
    _generator_arguments(gen)
    gen.add_argument('-o', '--output', help='Edge-list file to write (metadata goes to <output>.json)')

    cls = sub.add_parser('classify', parents=[common], help='Report block structure and graph class')
    cls.add_argument('-i', '--input', required=True, help='Edge-list file')

    orient = sub.add_parser('orient', parents=[common], help='Construct a semi-proper orientation')
    orient.add_argument('-i', '--input', required=True, help='Edge-list file')
    orient.add_argument('-o', '--output', help='Orientation file to write')
    orient.add_argument('--trace', action='store_true', help='Include the per-step case trace in the report')
    orient.add_argument('--class', dest='construction', choices=['auto', 'cactus', 'ear_peelable'], default='auto',
                        help='Construction to use; auto picks the cactus construction for cacti (default: auto)')

    exact = sub.add_parser('exact', parents=[common], help='Exact orientation numbers')
    exact.add_argument('-i', '--input', required=True, help='Edge-list file')
    exact.add_argument('--method', choices=['brute', 'labeling', 'proper'], default='brute',
                       help='Solver (default: brute)')
    exact.add_argument('--mu-cap', type=int, help='Largest in-weight to try (default: maximum degree)')
    exact.add_argument('--weight-domain', type=int, choices=[2, 3], default=2,
                       help='Largest arc weight for brute force (default: 2)')
    exact.add_argument('--budget-secs', type=float, default=defaults.search.budget_seconds,
                       help=f'Wall-clock budget (default: {defaults.search.budget_seconds})')
    exact.add_argument('--budget-nodes', type=int, help='Search node budget')
    exact.add_argument('--workers', type=int, default=1,
                       help='Worker processes for the brute and proper methods (default: 1)')

    val = sub.add_parser('validate', parents=[common], help='Validate an orientation')
    val.add_argument('-g', '--graph', required=True, help='Edge-list file')
    val.add_argument('-d', '--orientation', required=True, help='Orientation file')
    val.add_argument('--mu', type=int, help='Maximum allowed in-weight')
    val.add_argument('--weight-domain', type=int, choices=[2, 3], help='Largest allowed arc weight')

    audit = sub.add_parser('audit', parents=[common], help='Check the orientation inequality chain')
    audit.add_argument('-i', '--input', required=True, help='Edge-list file')
    audit.add_argument('--budget-secs', type=float, default=defaults.search.budget_seconds,
                       help=f'Wall-clock budget per solver (default: {defaults.search.budget_seconds})')
    audit.add_argument('--budget-nodes', type=int, help='Search node budget shared by both solvers')

    tight = sub.add_parser('tightness', parents=[common], help='In-weight class sizes of an orientation')
    tight.add_argument('-g', '--graph', required=True, help='Edge-list file')
    tight.add_argument('-d', '--orientation', required=True, help='Orientation file')
    tight.add_argument('--uop', type=int, help='Order of the universal outerplanar graph, to check A/B/C classes')

    sweep = sub.add_parser('sweep', parents=[common], help='Orient and validate a seeded batch of graphs')
    _generator_arguments(sweep)
    sweep.add_argument('--count', type=int, default=10, help='Number of seeds, starting at --seed (default: 10)')
    sweep.add_argument('--output-csv', help='Per-graph table to write')

    return parser.parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    """Main application entry point"""
    args = parse_arguments(argv)
    setup_logging(args.verbose)

    logging.debug(f"{settings.app_name} {settings.app_version}: {args.command}")
    return SemiproperCommands().run(args)


if __name__ == "__main__":
    sys.exit(main())
