"""plot <figure-name> --in DIR --out FILE: render one fig2..fig8 analog."""

import argparse
import sys
from pathlib import Path

from .figures import FIGURE_NAMES, FigureError, build_figure, render


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="plot", description="Render a specbasis figure from CSV output")
    parser.add_argument("figure", choices=FIGURE_NAMES)
    parser.add_argument("--in", dest="in_dir", required=True,
                        help="directory holding the input CSVs")
    parser.add_argument("--out", required=True, help="output image file")
    args = parser.parse_args(argv)
    try:
        spec = build_figure(args.figure, Path(args.in_dir), Path(args.out))
        path = render(spec)
    except FigureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(path)
    return 0


if __name__ == "__main__":
    sys.exit(main())
