import argparse
import sys

from dassl.config import get_cfg_default
from dassl.utils import collect_env_info, set_random_seed, setup_logger

from utils import exit_code_for
from rings import parse_ring_spec

# importing the package registers every command
from commands import build_command
from commands.constants import get_ring_specified_config


def print_args(args, cfg):
    print("***************")
    print("** Arguments **")
    print("***************")
    optkeys = list(args.__dict__.keys())
    optkeys.sort()
    for key in optkeys:
        print("{}: {}".format(key, args.__dict__[key]))
    print("************")
    print("** Config **")
    print("************")
    print(cfg)


def reset_cfg(cfg, args):
    if args.ring:
        cfg.RING.SPEC = args.ring

    if args.r:
        cfg.RANK = args.r

    if args.ideal:
        cfg.IDEAL.A = args.ideal

    if args.level:
        cfg.IDEAL.N = args.level

    if args.prec:
        cfg.MMATRIX.PRECISION = args.prec
        cfg.EXPAND.PRECISION = args.prec

    if args.format:
        cfg.FORMAT = args.format

    if args.seed >= 0:
        cfg.SEED = args.seed

    if args.output_dir:
        cfg.OUTPUT_DIR = args.output_dir

    if args.command:
        cfg.COMMAND.NAME = args.command


def extend_cfg(cfg):
    """
    Add the config variables of the boundary computations.

    E.g.
        from yacs.config import CfgNode as CN
        cfg.ZETA = CN()
        cfg.ZETA.NUM_COEFFS = 10
    """
    from yacs.config import CfgNode as CN

    # Empty prints the result without saving it or a log file
    cfg.OUTPUT_DIR = ""
    # Selftest samples are reproducible by default
    cfg.SEED = 1
    # Output format: table, json or csv
    cfg.FORMAT = "table"
    # Rank r of the Drinfeld modular variety (r >= 2)
    cfg.RANK = 2

    # Ring spec text, e.g. "poly q=3", "shifted q=2 g=T^2+T+1",
    # "elliptic q=2 a=[0,0,1,0,0]" (a = [a1, a2, a3, a4, a6])
    cfg.RING = CN()
    cfg.RING.SPEC = "poly q=2"

    cfg.COMMAND = CN()
    cfg.COMMAND.NAME = "Zeta"

    # Ideals and elements in the text forms of rings/parsing.py
    cfg.IDEAL = CN()
    cfg.IDEAL.N = ""  # level n; empty means the least proper integral ideal
    cfg.IDEAL.B = "A"  # twist ideal b of Delta_n^b and of the cuspidal matrix
    cfg.IDEAL.A = "A"  # ideal a of the division form E_{1,u}
    cfg.IDEAL.U1 = ""  # representative u1 in n^{-1}a of the division form
    cfg.IDEAL.X = ""  # element x of the coset x + a reported by the zeta command

    cfg.ENUM = CN()
    # Class zeta heads are checked against ideal enumeration up to this degree
    cfg.ENUM.DEGREE_BOUND = 6
    # Largest F_q-dimension of a Riemann-Roch space enumerated element by element
    cfg.ENUM.MAX_DIM = 20

    cfg.ZETA = CN()
    cfg.ZETA.NUM_COEFFS = 10
    # Coset zetas to report, each "x | a"
    cfg.ZETA.COSETS = []
    # Coset zetas are compared with the brute-force coset sum up to this degree
    cfg.ZETA.CHECK_DEGREE = 6

    cfg.ORDERS = CN()
    cfg.ORDERS.MODE = "discriminant"  # discriminant, division or canonical
    cfg.ORDERS.WEIGHT = 1  # weight of E_{k,u} in division mode

    cfg.MATRIX = CN()
    cfg.MATRIX.MODE = "both"  # cuspidal, mmatrix or both
    cfg.MATRIX.B = ""  # twist ideal of the cuspidal matrix; empty means IDEAL.B

    # M(a,b) over the completion at infinity
    cfg.MMATRIX = CN()
    cfg.MMATRIX.PRECISION = 4  # pi_inf digits kept in every entry
    cfg.MMATRIX.WEIGHT_MULTIPLES = [1, 2]  # k = m * (q - 1)

    cfg.EXPAND = CN()
    cfg.EXPAND.Q = 0  # field size; 0 means the q of the ring
    cfg.EXPAND.PRECISION = -1  # t-precision N; -1 means q^3
    cfg.EXPAND.LEVEL = ""  # level n of the t <-> t_n relation, empty to skip it

    cfg.SELFTEST = CN()
    cfg.SELFTEST.RINGS = [
        "poly q=2",
        "poly q=3",
        "shifted q=2 g=T^2+T+1",
        "elliptic q=2 a=[0,0,1,0,0]",
    ]
    cfg.SELFTEST.SUITES = [
        "base_arith",
        "rings",
        "zeta",
        "boundary",
        "independence",
        "expansions",
        "counting",
    ]
    cfg.SELFTEST.SAMPLES = 20  # random samples per property


def setup_cfg(args):
    cfg = get_cfg_default()
    extend_cfg(cfg)

    # 1. From the ring config file
    if args.ring_config_file:
        cfg.merge_from_file(args.ring_config_file)

    # 2. From the command config file
    if args.config_file:
        cfg.merge_from_file(args.config_file)

    # 3. From input arguments
    reset_cfg(cfg, args)

    # 4. From optional input arguments
    cfg.merge_from_list(args.opts)

    # 5. specific ring family config
    if not args.no_ring_defaults:
        family, _ = parse_ring_spec(cfg.RING.SPEC)
        cfg.merge_from_list(get_ring_specified_config(family))

    cfg.freeze()

    return cfg


def main(args):
    cfg = setup_cfg(args)
    if cfg.SEED >= 0:
        print("Setting fixed seed: {}".format(cfg.SEED))
        set_random_seed(cfg.SEED)
    if cfg.OUTPUT_DIR:
        setup_logger(cfg.OUTPUT_DIR)
    print_args(args, cfg)
    print("Collecting env info ...")
    print("** System info **\n{}\n".format(collect_env_info()))

    command = build_command(cfg)
    command.execute()


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument(
        "--ring", type=str, default="", help='ring spec, e.g. "elliptic q=2 a=[0,0,1,0,0]"'
    )
    parser.add_argument("--r", type=int, default=0, help="rank r >= 2")
    parser.add_argument("--ideal", type=str, default="", help="ideal a of the division forms")
    parser.add_argument("--level", type=str, default="", help="level ideal n")
    parser.add_argument(
        "--prec", type=int, default=0, help="precision of the M(a,b) entries and of the t-expansion"
    )
    parser.add_argument(
        "--format", type=str, default="", choices=["", "table", "json", "csv"], help="output format"
    )
    parser.add_argument(
        "--seed", type=int, default=-1, help="only positive value overrides the configured seed"
    )
    parser.add_argument("--output-dir", type=str, default="", help="output directory")
    parser.add_argument(
        "--command",
        type=str,
        default="",
        help="name of command: Zeta, Orders, Matrix, Expand or Selftest",
    )
    parser.add_argument(
        "--config-file", type=str, default="", help="path to config file"
    )
    parser.add_argument(
        "--ring-config-file",
        type=str,
        default="",
        help="path to config file for ring setup",
    )
    parser.add_argument(
        "--no-ring-defaults",
        action="store_true",
        default=False,
        help="skip the per-family overrides of commands/constants.py",
    )
    parser.add_argument(
        "opts",
        default=None,
        nargs=argparse.REMAINDER,
        help="modify config options using the command-line",
    )

    args = parser.parse_args()
    try:
        main(args)
    except Exception as exc:
        print("{}: {}".format(type(exc).__name__, exc))
        sys.exit(exit_code_for(exc))
