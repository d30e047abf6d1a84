import argparse
import tqdm

import mpmath

from overtop import get_config, logger
from overtop.sangaku.asymmetric import make_triangle, uniqueness_sweep
from overtop.utils.visualization import plot_sweep


CFG_PATH = "configs/worked_triangle.yaml"


def parse_args():
    parser = argparse.ArgumentParser(description="Compare inscribed and bisector circle radii "
                                                 "over the admissible eccentricities")
    parser.add_argument("--config-path", "-c", default=CFG_PATH, help="Path to config file")
    parser.add_argument("--samples", "-n", type=int, default=None,
                        help="Number of eccentricities in the grid")
    parser.add_argument("--digits", "-d", type=int, default=20,
                        help="Working digits for each sample")
    parser.add_argument("--out", "-o", default="eccentricity_sweep.svg",
                        help="Output SVG path")
    parser.add_argument("extra_cfg", nargs=argparse.REMAINDER,
                        help="Extra config options as 'KEY value' pairs")
    return parser.parse_args()


def main(args):
    cfg = get_config(args.config_path, args.extra_cfg)
    samples = args.samples if args.samples is not None else cfg.ASYMMETRIC.SWEEP_SAMPLES
    with mpmath.workdps(args.digits):
        t = make_triangle(*(mpmath.mpf(str(cfg.TRIANGLE[k])) for k in "ABC"))
    sweep = uniqueness_sweep(t, samples, args.digits, cfg.ASYMMETRIC.FOOT_SAMPLES,
                             progress=lambda it: tqdm.tqdm(it, desc="eccentricity"))
    print("sign changes: {}".format(sweep.sign_changes))
    if sweep.crossing is not None:
        print("crossing near eps = {}".format(mpmath.nstr(sweep.crossing, 10)))
    else:
        logger.warning("the two radius curves never cross on this grid")

    plot_sweep(sweep, args.out, cfg.RENDER.SIZE, cfg.RENDER.DPI, cfg.RENDER.HASH_SALT)
    print("wrote {}".format(args.out))


if __name__ == "__main__":
    main(parse_args())
