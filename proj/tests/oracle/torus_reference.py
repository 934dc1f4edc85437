"""Reference values for the lattice resolvent kernel, computed independently
with mpmath from the defining torus integral.

Values printed here are frozen into the C++ unit tests. Run with
`python3 tests/oracle/torus_reference.py`.
"""
import mpmath as mp

mp.mp.dps = 30


def green_torus(z, n):
    """(2 pi)^-d * integral over T^d of e^{i n.theta} / (2d - 2 sum cos - z)."""
    d = len(n)
    z = mp.mpc(z)
    if d == 1:
        f = lambda t: mp.cos(n[0] * t) / (2 - 2 * mp.cos(t) - z)
        return mp.quad(f, [0, mp.pi / 2, mp.pi]) / mp.pi
    if d == 2:
        f = lambda a, b: (mp.cos(n[0] * a) * mp.cos(n[1] * b)
                          / (4 - 2 * mp.cos(a) - 2 * mp.cos(b) - z))
        pts = [0, mp.pi / 2, mp.pi]
        return mp.quad(f, pts, pts) / mp.pi**2
    if d == 3:
        # integrate out the last angle analytically: (1/pi) int_0^pi dt/(A - 2cos t)
        # = 1/sqrt(A^2 - 4) with the branch continuous from large A.
        def inner(a, b):
            A = 6 - 2 * mp.cos(a) - 2 * mp.cos(b) - z
            return mp.sqrt(A - 2) * mp.sqrt(A + 2)
        f = lambda a, b: mp.cos(n[0] * a) * mp.cos(n[1] * b) / inner(a, b)
        pts = [0, mp.pi / 2, mp.pi]
        assert n[2] == 0
        return mp.quad(f, pts, pts) / mp.pi**2
    raise ValueError(d)


def show(label, v):
    v = mp.mpc(v)
    print(f"{label:40s} {mp.nstr(v.real, 17):>26s} {mp.nstr(v.imag, 17):>26s}")


if __name__ == "__main__":
    show("G1(-2,0)", green_torus(-2, [0]))
    show("G1(-2,1)", green_torus(-2, [1]))
    show("G1(6,2)", green_torus(6, [2]))
    show("G2(-4,(0,0))", green_torus(-4, [0, 0]))
    show("G2(-4,(1,0))", green_torus(-4, [1, 0]))
    show("G2(-4,(1,1))", green_torus(-4, [1, 1]))
    show("G2(-1,(1,1))", green_torus(-1, [1, 1]))
    show("G2(-0.5,(0,0))", green_torus(-0.5, [0, 0]))
    show("G2(-0.5,(1,0))", green_torus(-0.5, [1, 0]))
    show("G2(-0.5,(2,1))", green_torus(-0.5, [2, 1]))
    show("G2(-0.5,(3,3))", green_torus(-0.5, [3, 3]))
    show("G2(4+0.5i,(0,0))", green_torus(4 + 0.5j, [0, 0]))
    show("G2(4+0.5i,(1,1))", green_torus(4 + 0.5j, [1, 1]))
    show("G2(4+0.5i,(2,1))", green_torus(4 + 0.5j, [2, 1]))
    show("G2(9+1i,(2,0))", green_torus(9 + 1j, [2, 0]))
    show("G3(-1,(0,0,0))", green_torus(-1, [0, 0, 0]))
    show("I0(1)", mp.besseli(0, 1))
    show("I3(2.5)", mp.besseli(3, 2.5))
