"""Regenerate the coordinate-derived fixtures in ../fixtures.

The small hand-drawn networks (triangle, example_s3, theta3, pendant, path3)
are authored directly as JSON and are not touched here.
"""

from pathlib import Path

from dualnet.generators import POLYHEDRA, polyhedron, wheel
from dualnet.netfile import save_network

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    OUT.mkdir(exist_ok=True)
    for name in POLYHEDRA:
        save_network(polyhedron(name), OUT / f"{name}.json")
    for n in range(4, 9):
        save_network(wheel(n), OUT / f"wheel{n}.json")


if __name__ == "__main__":
    main()
