"""CLI entry point for the canopy spectra experiments."""

import argparse
import logging
import sys

from . import __version__
from .config import Experiment, get_experiment_export_path
from .errors import CanopySpectraError
from .experiment_config import load_config
from .pipeline import EXIT_ERROR, run
from .reporting import emit_plots

PLOTS_COMMAND = "plots"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canopy-spectra",
        description="Random operators on regular trees: spectra, Green functions and level statistics",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  canopy-spectra spacing --config configs/spacing.toml
  canopy-spectra bethe --set K=3 --set L=8 --check
  canopy-spectra lyapunov --set distribution.type=uniform --set distribution.p1=-1
  canopy-spectra plots --out-dir exports/spacing
        """
    )

    parser.add_argument(
        'experiment',
        choices=[e.value for e in Experiment] + [PLOTS_COMMAND],
        help='Experiment to run, or "plots" to write plot files for an output directory'
    )

    parser.add_argument(
        '--config',
        help='TOML experiment config'
    )

    parser.add_argument(
        '--set',
        dest='overrides',
        action='append',
        default=[],
        metavar='KEY=VALUE',
        help='Override one config key; repeatable'
    )

    parser.add_argument(
        '--check',
        action='store_true',
        help='Exit with status 2 when an acceptance check fails'
    )

    parser.add_argument(
        '--out-dir',
        help='Output directory (default: exports/<experiment>/)'
    )

    parser.add_argument(
        '--verbose',
        action='store_true',
        help='Debug logging'
    )

    parser.add_argument(
        '--version',
        action='version',
        version=f'canopy-spectra v{__version__}'
    )
    return parser


def run_command(args: argparse.Namespace) -> int:
    if args.experiment == PLOTS_COMMAND:
        if not args.out_dir:
            raise CanopySpectraError("plots needs --out-dir")
        emit_plots(args.out_dir)
        return 0

    overrides = list(args.overrides)
    if args.out_dir:
        overrides.append(f"out_dir={args.out_dir!r}")
    config = load_config(args.config, overrides, experiment=args.experiment)

    print("=" * 60)
    print("Canopy Spectra")
    print("=" * 60)
    print(f"Experiment: {config.experiment}")
    print(f"Output: {get_experiment_export_path(config.out_dir, config.experiment_kind)}")
    print("=" * 60)
    return run(config, check=args.check)


def main(argv: list[str] | None = None) -> None:
    """Main CLI entry point with argument parsing."""
    args = build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        code = run_command(args)
    except KeyboardInterrupt:
        print("\n\nInterrupted by user")
        sys.exit(EXIT_ERROR)
    except Exception as e:
        print(f"\n\nFailed: {e}")
        sys.exit(EXIT_ERROR)
    sys.exit(code)


if __name__ == "__main__":
    main()
