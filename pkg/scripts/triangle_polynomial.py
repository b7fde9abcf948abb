"""Lattice-point polynomials of the two readings of the 'triangle' set function.

z{1}=z{2}=z{12}=3 on n=2 is the segment conv{(3,0),(0,3)} (4 points).
The planar triangle conv{0, 3e1, 3e2} is the image of the simplex
z == 3 on n=3 under x3 -> 1 (10 points).
"""
from matbrion import Matroid, SetFunction, enumerate_lattice_points, from_delta, q_matroid
from matbrion.fixtures import triangle_z


def main() -> None:
    seg = q_matroid(from_delta(triangle_z()), Matroid.boolean(2)).result
    print(f"n=2, z=(3,3,3): {len(seg)} terms")
    print(f"  {seg}")
    z3 = SetFunction.from_function(3, lambda s: 3)
    tri = q_matroid(from_delta(z3), Matroid.boolean(3)).result
    assert tri == enumerate_lattice_points(z3)
    flat = tri.set_ones([3])
    print(f"n=3, z==3, then x3 -> 1: {len(flat)} terms")
    print(f"  {flat.to_text()}")


if __name__ == "__main__":
    main()
