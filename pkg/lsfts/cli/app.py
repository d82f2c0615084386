import argparse
import logging
import sys
from typing import List, Optional

from lsfts.exceptions import LsftsError, UsageError
from lsfts.kernels import LagWindowType, SmoothingKernelType
from lsfts.settings import Settings
from lsfts.cli import commands

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class ArgumentParser(argparse.ArgumentParser):
    """argparse parser that raises instead of exiting, so run() owns the exit code."""

    def __init__(self, *args, **kwargs):
        # --h and --k must not prefix-match --help, --h-constant, --k1 or --k2
        kwargs.setdefault('allow_abbrev', False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _order(value: str):
    if value == 'auto':
        return value
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'auto' or an integer, got {value!r}")


def _common_flags() -> ArgumentParser:
    # defaults are filled in after parsing so the flags work before or after the subcommand
    common = ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument('--log-level', choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], type=str.upper)
    common.add_argument('--k1', choices=[kind.value for kind in SmoothingKernelType], help="smoothing kernel")
    common.add_argument('--k2', choices=[kind.value for kind in LagWindowType], help="lag window")
    common.add_argument('--weights', choices=['paper', 'kernel', 'normalized'],
                        help="exact 1/(T h) kernel weights (paper, alias kernel) or weights rescaled to sum to one")
    common.add_argument('--h-constant', type=float, dest='h_constant',
                        help="constant c in the default bandwidths c T^(-1/3) and c T^(-0.4)")
    return common


def _fill_defaults(args: argparse.Namespace, settings: Settings):
    defaults = {
        'log_level': settings.log_level,
        'k1': SmoothingKernelType.EPANECHNIKOV.value,
        'k2': LagWindowType.BARTLETT.value,
        'weights': 'paper',
        'h_constant': settings.h_constant,
    }
    for name, value in defaults.items():
        if not hasattr(args, name):
            setattr(args, name, value)


def build_parser() -> ArgumentParser:
    common = _common_flags()
    parser = ArgumentParser(prog='lsfts', parents=[common],
                            description="Estimation and inference for locally stationary functional time series")
    subparsers = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    subparsers.required = True

    p = subparsers.add_parser('simulate', parents=[common], help="simulate curves from a tvAR(1) model")
    p.add_argument('--config', help="model JSON; the default three-component model when omitted")
    p.add_argument('--T', type=int, required=True, dest='T')
    p.add_argument('--n', type=int, required=True)
    p.add_argument('--seed', type=int)
    p.add_argument('--out')
    p.set_defaults(handler=commands.simulate)

    p = subparsers.add_parser('estimate-mean', parents=[common], help="local mean curves")
    p.add_argument('--input', required=True)
    p.add_argument('--u', type=float, nargs='+', required=True)
    p.add_argument('--h', type=float)
    p.add_argument('--out')
    p.set_defaults(handler=commands.estimate_mean)

    p = subparsers.add_parser('fpca', parents=[common], help="local eigenvalues and eigenfunctions")
    p.add_argument('--input', required=True)
    p.add_argument('--u', type=float, required=True)
    p.add_argument('--h', type=float)
    p.add_argument('--q', type=int, required=True)
    p.add_argument('--center', action=argparse.BooleanOptionalAction, default=True)
    p.add_argument('--out', help="prefix for PREFIX_eigenvalues.csv and PREFIX_eigenfunctions.csv")
    p.set_defaults(handler=commands.fpca)

    p = subparsers.add_parser('longrun', parents=[common], help="local long-run covariance kernel")
    p.add_argument('--input', required=True)
    p.add_argument('--u', type=float, required=True)
    p.add_argument('--h', type=float)
    p.add_argument('--b', type=float)
    p.add_argument('--out')
    p.set_defaults(handler=commands.longrun)

    p = subparsers.add_parser('predict', parents=[common], help="k-step-ahead curve prediction")
    p.add_argument('--input', required=True)
    p.add_argument('--t1', type=int, help="use the first T1 curves; all of them when omitted")
    p.add_argument('--k', type=int, default=1)
    p.add_argument('--q', type=_order, default='auto')
    p.add_argument('--h', type=float)
    p.add_argument('--T', type=int, dest='T')
    p.add_argument('--center', action='store_true')
    p.add_argument('--out')
    p.set_defaults(handler=commands.predict)

    p = subparsers.add_parser('two-sample', parents=[common], help="local two-sample mean tests")
    p.add_argument('--input-x', required=True, dest='input_x')
    p.add_argument('--input-y', required=True, dest='input_y')
    p.add_argument('--u', type=float, required=True)
    p.add_argument('--h', type=float)
    p.add_argument('--b', type=float)
    p.add_argument('--q', type=_order, default='auto')
    p.add_argument('--eps0', type=float)
    p.add_argument('--n-mc', type=int, dest='n_mc')
    p.add_argument('--seed', type=int)
    p.add_argument('--out')
    p.set_defaults(handler=commands.two_sample)

    p = subparsers.add_parser('bench', parents=[common], help="run a Monte Carlo experiment from the manifest")
    p.add_argument('--experiment', required=True)
    p.add_argument('--replicates', type=int)
    p.add_argument('--seed', type=int)
    p.add_argument('--manifest')
    p.add_argument('--out')
    p.set_defaults(handler=commands.bench)

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Command-line entry point

    Returns:
        int: 0 on success, 1 on a usage error, 2 on a data error
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _fill_defaults(args, Settings())
    except LsftsError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA

    logging.basicConfig(level=args.log_level, stream=sys.stderr,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
    try:
        args.handler(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (LsftsError, OSError) as e:
        logger.debug(f"{args.command} failed", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK
