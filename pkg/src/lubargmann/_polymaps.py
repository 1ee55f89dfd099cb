"""Polynomial maps between the L and B invariant vectors.

Generated mechanically from the reference closed forms, then certified
against direct traces (see tests/test_invariants.py). Every B(L) entry and
every L(B) entry except L10 and L11 reproduces the direct values to
round-off. The reference L10 and L11 do not; with ``verbatim=False`` they are
replaced by the inversion of the (certified) B17 and B18 relations:

    8192 B17 = P17(L) + 16i (L4 L18 - L12 L15 - L10)
    8192 B18 = P18(L) + 16i (L7 L17 - L12 L16 - L11)

where P17/P18 involve neither L10 nor L11.
"""
# flake8: noqa
from __future__ import annotations

import numpy as np


def _p17(L):
    L1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12, L13, L14, L15, L16, L17, L18 = L
    return (
        1 + L7**3 - 240*L14 + 9*L4**4 + 15*L7 + 15*L7**2 + 16*L12**3 + 20*L14**2 + 24*L6
        + 32*L5**2 + 36*L4 + 48*L1**2 + 60*L3 + 60*L8 + 84*L4**3 + 126*L4**2 + 210*L12 +
        224*L5 + 552*L12**2 + L2*(15 - 96*L14 - 8*L6 + 12*L8 + 36*L12**2 + 91*L4 +
        132*L5 + 300*L12 + L12*(8*L5 + 12*L4*(22 + L4)) + L4*(-4*L8 + 44*L5 + L4*(77 +
        9*L4)) + L7*(30 + 8*L5 + 42*L4**2 + 168*L4 + 2*L12*(18 + 2*L4)) + L7**2*(3 +
        5*L4) - 4*L3*(-3 + L4)) + L2**2*(15 + 4*L5 + 18*L12 + L7*(3 + L4) - L4*(-18 + L4
        + 2*L12)) - L2**3*(-1 + L4) - 400*L14*L4 - 256*L12*L14 - 96*L14*L7 -
        64*L14*L4**2 - 48*L14*L5 - 16*L12*L6 - 12*L3*L4**2 - 12*L6*L7 - 12*L8*L4**2 -
        4*L4*L9 - 4*L5*L8 + 3*L4*L7**3 + 4*L5*L7**2 + 8*L1*(-15 - 48*L12 - 10*L5 + 6*L14
        + L2*(-15 + L4*(-6 + L4)) + L7*(-15 + L4*(-16 + L4)) - L4*(61 - 2*L14 + 12*L12 +
        L4*(27 + L4))) + 8*L12*L13 + 8*L4*L6 + 12*L3*L7 + 12*L7*L8 + 18*L12*L7**2 +
        24*L12*L3 + 24*L12*L8 + 30*L12*L4**3 + 40*L7*L12**2 + 48*L3*L4 + 48*L4*L8 +
        75*L4**2*L7**2 + 96*L5*L4**2 + 105*L7*L4**3 + 132*L5*L7 + 150*L4*L7**2 +
        300*L12*L7 + 312*L4*L12**2 + 315*L4*L7 + 336*L12*L5 + 448*L4*L5 + 525*L7*L4**2 +
        630*L12*L4**2 + 1050*L12*L4 - 48*L14*L4*L7 - 32*L12*L14*L4 - 8*L12*L3*L4 -
        8*L12*L4*L8 - 4*L4*L7*L8 + 6*L12*L4*L7**2 + 8*L12*L5*L7 + 48*L12*L4*L5 +
        60*L12*L7*L4**2 + 108*L4*L5*L7 + 600*L12*L4*L7
    )


def _p18(L):
    L1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12, L13, L14, L15, L16, L17, L18 = L
    return (
        1 + L4**3 - 240*L14 + 9*L7**4 + 15*L4 + 15*L4**2 + 16*L12**3 + 20*L14**2 + 24*L9
        + 32*L8**2 + 36*L7 + 48*L1**2 + 60*L3 + 60*L5 + 84*L7**3 + 126*L7**2 + 210*L12 +
        224*L8 + 552*L12**2 + L2*(15 - 96*L14 - 8*L9 + 12*L5 + 36*L12**2 + 91*L7 +
        132*L8 + 300*L12 + L12*(8*L8 + 12*L7*(22 + L7)) + L4*(30 + 8*L8 + 42*L7**2 +
        168*L7 + 2*L12*(18 + 2*L7)) + L7*(-4*L5 + 44*L8 + L7*(77 + 9*L7)) + L4**2*(3 +
        5*L7) - 4*L3*(-3 + L7)) + L2**2*(15 + 4*L8 + 18*L12 + L4*(3 + L7) - L7*(-18 + L7
        + 2*L12)) - L2**3*(-1 + L7) - 400*L14*L7 - 256*L12*L14 - 96*L14*L4 -
        64*L14*L7**2 - 48*L14*L8 - 16*L12*L9 - 12*L3*L7**2 - 12*L4*L9 - 12*L5*L7**2 -
        4*L5*L8 - 4*L6*L7 + 3*L7*L4**3 + 4*L8*L4**2 + 8*L1*(-15 - 48*L12 - 10*L8 + 6*L14
        + L2*(-15 + L7*(-6 + L7)) + L4*(-15 + L7*(-16 + L7)) - L7*(61 - 2*L14 + 12*L12 +
        L7*(27 + L7))) + 8*L12*L13 + 8*L7*L9 + 12*L3*L4 + 12*L4*L5 + 18*L12*L4**2 +
        24*L12*L3 + 24*L12*L5 + 30*L12*L7**3 + 40*L4*L12**2 + 48*L3*L7 + 48*L5*L7 +
        75*L4**2*L7**2 + 96*L8*L7**2 + 105*L4*L7**3 + 132*L4*L8 + 150*L7*L4**2 +
        300*L12*L4 + 312*L7*L12**2 + 315*L4*L7 + 336*L12*L8 + 448*L7*L8 + 525*L4*L7**2 +
        630*L12*L7**2 + 1050*L12*L7 - 48*L14*L4*L7 - 32*L12*L14*L7 - 8*L12*L3*L7 -
        8*L12*L5*L7 - 4*L4*L5*L7 + 6*L12*L7*L4**2 + 8*L12*L4*L8 + 48*L12*L7*L8 +
        60*L12*L4*L7**2 + 108*L4*L7*L8 + 600*L12*L4*L7
    )


def b_from_l(v, verbatim: bool = False) -> np.ndarray:
    """B1..B18 from L1..L18. ``verbatim`` is accepted for symmetry; all entries certify."""
    L1, L2, L3, L4, L5, L6, L7, L8, L9, L10, L11, L12, L13, L14, L15, L16, L17, L18 = v
    out = np.empty(18, dtype=complex)
    out[0] = (
        1/2 + L4/2
    )
    out[1] = (
        1/2 + L7/2
    )
    out[2] = (
        1/4 + L12/4 + L4/4 + L7/4
    )
    out[3] = (
        1/4 + L2/4 + L4/4 + L7/4
    )
    out[4] = (
        1/16 - L14/8 + L2/16 + 3*L12/8 + 3*L4/16 + 3*L7/16 + L4*L7/8
    )
    out[5] = (
        1/16 - 3*L1/8 + 3*L12/8 + 3*L2/16 + 3*L4/16 + 3*L7/16
    )
    out[6] = (
        1/32 - 3*L1/16 - L14/16 + L5/16 + L4**2/32 + 3*L12/8 + 3*L4/16 + L2*(3 + L4)/32
        + L7*(3 + 3*L4)/32
    )
    out[7] = (
        1/32 - 3*L1/16 - L14/16 + L8/16 + L7**2/32 + 3*L12/8 + 3*L7/16 + L2*(3 + L7)/32
        + L4*(3 + 3*L7)/32
    )
    out[8] = (
        1/64 - 5*L14/32 - 3*L1/32 - L13/32 + L5/32 + L8/32 + L4**2/64 + L7**2/64 +
        3*L4/32 + 3*L7/32 + L12*(21 + 3*L2 + 3*L4 + 3*L7)/64 + L2*(3 + L4 + L7)/64 +
        3*L4*L7/16
    )
    out[9] = (
        1/64 - 3*L1/8 - L14/8 + L3/16 + L5/16 + L8/16 + L4**2/64 + L7**2/64 + 3*L12/8 +
        3*L4/32 + 3*L7/32 + L2*(6 + L2 + 2*L4 + 2*L7)/64 + 3*L4*L7/32
    )
    out[10] = (
        1/256 + L6/32 + L12**2/32 + L4**3/256 + L7**2/256 + 3*L7/128 + 15*L4/256 +
        15*L4**2/256 - L1*(24 + 8*L4)/256 - L14*(24 + 8*L4)/256 + L12*(6 + L2 + L7 +
        6*L4)/32 + L3*(4 - 4*L4)/256 + L4*L7**2/256 + L5*(28 + 4*L4)/256 + L8*(4 -
        4*L4)/256 + L2**2*(1 + L4)/256 + 3*L7*L4**2/128 + 9*L4*L7/64 + L2*(2 + 2*L4)*(3
        + L4 + L7)/256
    )
    out[11] = (
        1/256 + L9/32 + L12**2/32 + L4**2/256 + L7**3/256 + 3*L4/128 + 15*L7/256 +
        15*L7**2/256 - L1*(24 + 8*L7)/256 - L14*(24 + 8*L7)/256 + L12*(6 + L2 + L4 +
        6*L7)/32 + L3*(4 - 4*L7)/256 + L5*(4 - 4*L7)/256 + L7*L4**2/256 + L8*(28 +
        4*L7)/256 + L2**2*(1 + L7)/256 + 3*L4*L7**2/128 + 9*L4*L7/64 + L2*(2 + 2*L7)*(3
        + L4 + L7)/256
    )
    out[12] = (
        1/128 + L5/16 + L12**2/32 + L7**2/128 + 3*L7/64 + 5*L4/64 + 5*L4**2/128 - L1*(6
        - 2*L4)/128 - L14*(10 + 2*L4)/128 + 1j*L15/32 + L12*(30 + 2*L2 + 6*L7 +
        18*L4)/128 + L2*(3 + L4 + L7 + L4*L7)/128 + L4*L7**2/128 + L8*(2 - 2*L4)/128 +
        3*L7*L4**2/128 + 27*L4*L7/128
    )
    out[13] = (
        1/128 + L8/16 + L12**2/32 + L4**2/128 + 3*L4/64 + 5*L7/64 + 5*L7**2/128 - L1*(6
        - 2*L7)/128 - L14*(10 + 2*L7)/128 + 1j*L16/32 + L12*(30 + 2*L2 + 6*L4 +
        18*L7)/128 + L2*(3 + L4 + L7 + L4*L7)/128 + L5*(2 - 2*L7)/128 + L7*L4**2/128 +
        3*L4*L7**2/128 + 27*L4*L7/128
    )
    out[14] = (
        1/512 - 11*L14/128 - L13/128 - L6/128 + L3/128 + L4**3/512 + 3*L8/128 + 5*L7/256
        + 5*L7**2/512 + 7*L12**2/128 + 13*L5/256 + 15*L4/512 + 15*L4**2/512 + 17*L12/128
        - 3*L14*L4/128 - L1*(6 + 2*L7 + 3*L12 + L4*(4 + L7))/128 - L12*L14/128 -
        L13*L4/128 - L14*L7/128 - L2**2*(-1 + L4)/512 + L12*L5/128 + L12*L4**2/128 +
        L2*(3 + L5 + 3*L7 + 12*L12 + L4*(5 + 2*L12 + 4*L7))/256 + 1j*(-4*L16 + 4*L17 +
        16*L15)/512 + L5*(6*L4 + 6*L7)/512 + 11*L12*L4/64 + 11*L12*L7/128 +
        13*L7*L4**2/256 + 13*L4*L7**2/512 + 19*L4*L7/128 + 3*L12*L4*L7/128
    )
    out[15] = (
        1/512 - 11*L14/128 - L13/128 - L9/128 + L3/128 + L7**3/512 + 3*L5/128 + 5*L4/256
        + 5*L4**2/512 + 7*L12**2/128 + 13*L8/256 + 15*L7/512 + 15*L7**2/512 + 17*L12/128
        - 3*L14*L7/128 - L1*(6 + 2*L4 + 3*L12 + L7*(4 + L4))/128 - L12*L14/128 -
        L13*L7/128 - L14*L4/128 - L2**2*(-1 + L7)/512 + L12*L8/128 + L12*L7**2/128 +
        L2*(3 + L8 + 3*L4 + 12*L12 + L7*(5 + 2*L12 + 4*L4))/256 + 1j*(-4*L15 + 4*L18 +
        16*L16)/512 + L8*(6*L4 + 6*L7)/512 + 11*L12*L7/64 + 11*L12*L4/128 +
        13*L4*L7**2/256 + 13*L7*L4**2/512 + 19*L4*L7/128 + 3*L12*L4*L7/128
    )
    out[16] = (_p17(v) + 16j * (L4 * L18 - L12 * L15 - L10)) / 8192
    out[17] = (_p18(v) + 16j * (L7 * L17 - L12 * L16 - L11)) / 8192
    return out


def _l_reference(v) -> np.ndarray:
    B1, B2, B3, B4, B5, B6, B7, B8, B9, B10, B11, B12, B13, B14, B15, B16, B17, B18 = v
    out = np.empty(18, dtype=complex)
    out[0] = (
        2/3 - 2*B1 - 2*B2 + 2*B4 + 4*B3 - 8*B6/3
    )
    out[1] = (
        1 - 2*B1 - 2*B2 + 4*B4
    )
    out[2] = (
        4 - 16*B7 - 16*B8 - 12*B1 - 12*B2 - 4*B4**2 + 4*B4 + 16*B10 + 24*B3 + 4*B1*B2 +
        4*B1*B4 + 4*B2*B4
    )
    out[3] = (
        -1 + 2*B1
    )
    out[4] = (
        -1 - 8*B5 - 8*B6 + 2*B2 + 4*B4 + 16*B7 - 4*B1*B4
    )
    out[5] = (
        4/3 - 32*B7 - 16*B10 - 16*B4 - 16*B3**2 - 12*B1**2 - 4*B2**2 + 4*B4**2 + 16*B5 +
        32*B11 + 16*B1/3 + 80*B6/3 - 32*B1*B7 - 24*B1*B2 - 16*B1*B5 - 16*B3*B4 -
        8*B1*B4**2 + 8*B2*B4 + 8*B2*B1**2 + 8*B4*B1**2 + 16*B1*B10 + 16*B2*B3 + 24*B1*B4
        + 32*B1*B3 - 16*B1*B6/3
    )
    out[6] = (
        -1 + 2*B2
    )
    out[7] = (
        -1 - 8*B5 - 8*B6 + 2*B1 + 4*B4 + 16*B8 - 4*B2*B4
    )
    out[8] = (
        4/3 - 32*B8 - 16*B10 - 16*B4 - 16*B3**2 - 12*B2**2 - 4*B1**2 + 4*B4**2 + 16*B5 +
        32*B12 + 16*B2/3 + 80*B6/3 - 32*B2*B8 - 24*B1*B2 - 16*B2*B5 - 16*B3*B4 -
        8*B2*B4**2 + 8*B1*B4 + 8*B1*B2**2 + 8*B4*B2**2 + 16*B1*B3 + 16*B10*B2 + 24*B2*B4
        + 32*B2*B3 - 16*B2*B6/3
    )
    out[9] = (
        2*1j*(27 - 768*B7**2 - 288*B3**3 - 192*B14 - 129*B4**2 - 97*B1 - 90*B10 - 81*B2
        - 46*B1**3 - 40*B6**2 - 18*B4 - 16*B7 - 12*B11 - 12*B5 + 18*B2**3 + 24*B9 +
        36*B12 + 78*B2**2 + 88*B6 + 96*B13 + 114*B1**2 + 172*B3 + 192*B16 + 456*B3**2 +
        768*B17 - 624*B3*B7 - 552*B4*B7 - 480*B4*B3**2 - 384*B1*B16 - 384*B2*B3 -
        368*B1*B3 - 288*B10*B3 - 240*B3*B8 - 228*B2*B6 - 192*B1*B11 - 192*B1*B13 -
        144*B10*B4 - 144*B2*B9 - 144*B3*B2**2 - 144*B3*B4**2 - 141*B4*B2**2 -
        137*B4*B1**2 - 108*B3*B4 - 96*B10*B1**2 - 96*B13*B2 - 96*B7*B4**2 - 96*B8*B1**2
        - 92*B1*B6 - 72*B1*B12 - 72*B11*B2 - 68*B1*B5 - 64*B2*B1**2 - 48*B1*B9 -
        48*B5*B8 - 48*B6*B8 - 32*B6*B1**3 - 24*B4*B8 + 36*B1*B8 + 36*B2*B5 + 48*B4*B1**3
        + 48*B5*B6 + 48*B5*B4**2 + 48*B6*B4**2 + 54*B1*B4 + 54*B2*B4 + 60*B4*B5 +
        72*B1**2*B4**2 + 81*B2*B4**2 + 84*B2*B8 + 96*B11*B4 + 96*B3*B9 + 96*B5*B1**2 +
        96*B7*B8 + 96*B7*B1**2 + 108*B1*B2**2 + 120*B1*B3**2 + 132*B1*B7 + 138*B1*B10 +
        144*B3*B5 + 144*B5*B7 + 162*B10*B2 + 168*B3*B1**2 + 178*B1*B2 + 192*B11*B3 +
        192*B13*B3 + 228*B2*B7 + 261*B1*B4**2 + 336*B4*B6 + 360*B2*B3**2 + 384*B1*B14 +
        400*B6*B7 + 488*B3*B6 - 768*B1*B3*B7 - 390*B1*B2*B4 - 288*B1*B2*B3 -
        192*B3*B4*B7 - 144*B1*B10*B2 - 144*B1*B2*B5 - 96*B1*B3*B5 - 96*B1*B4*B7 -
        64*B1*B5*B6 - 48*B1*B2*B8 - 48*B1*B2*B4**2 - 40*B1*B2*B6 - 36*B2*B4*B5 -
        36*B2*B4*B6 + 32*B1*B3*B6 + 32*B4*B6*B1**2 + 48*B3*B4*B1**2 + 60*B1*B4*B5 +
        64*B2*B6*B1**2 + 72*B1*B4*B8 + 72*B1*B4*B2**2 + 72*B2*B4*B7 + 96*B1*B10*B4 +
        96*B3*B4*B5 + 96*B3*B4*B6 + 192*B1*B10*B3 + 192*B1*B2*B9 + 288*B1*B3*B8 +
        384*B1*B2*B7 + 540*B2*B3*B4 + 660*B1*B3*B4 - 192*B1*B2*B3*B4)/3
    )
    out[10] = (
        2*1j*(27 - 768*B8**2 - 288*B3**3 - 192*B13 - 129*B4**2 - 97*B2 - 90*B10 - 81*B1
        - 46*B2**3 - 40*B6**2 - 18*B4 - 16*B8 - 12*B12 - 12*B5 + 18*B1**3 + 24*B9 +
        36*B11 + 78*B1**2 + 88*B6 + 96*B14 + 114*B2**2 + 172*B3 + 192*B15 + 456*B3**2 +
        768*B18 - 624*B3*B8 - 552*B4*B8 - 480*B4*B3**2 - 384*B1*B3 - 384*B15*B2 -
        368*B2*B3 - 288*B10*B3 - 240*B3*B7 - 228*B1*B6 - 192*B12*B2 - 192*B14*B2 -
        144*B1*B9 - 144*B10*B4 - 144*B3*B1**2 - 144*B3*B4**2 - 141*B4*B1**2 -
        137*B4*B2**2 - 108*B3*B4 - 96*B1*B14 - 96*B10*B2**2 - 96*B7*B2**2 - 96*B8*B4**2
        - 92*B2*B6 - 72*B1*B12 - 72*B11*B2 - 68*B2*B5 - 64*B1*B2**2 - 48*B2*B9 -
        48*B5*B7 - 48*B6*B7 - 32*B6*B2**3 - 24*B4*B7 + 36*B1*B5 + 36*B2*B7 + 48*B4*B2**3
        + 48*B5*B6 + 48*B5*B4**2 + 48*B6*B4**2 + 54*B1*B4 + 54*B2*B4 + 60*B4*B5 +
        72*B2**2*B4**2 + 81*B1*B4**2 + 84*B1*B7 + 96*B12*B4 + 96*B3*B9 + 96*B5*B2**2 +
        96*B7*B8 + 96*B8*B2**2 + 108*B2*B1**2 + 120*B2*B3**2 + 132*B2*B8 + 138*B10*B2 +
        144*B3*B5 + 144*B5*B8 + 162*B1*B10 + 168*B3*B2**2 + 178*B1*B2 + 192*B12*B3 +
        192*B14*B3 + 228*B1*B8 + 261*B2*B4**2 + 336*B4*B6 + 360*B1*B3**2 + 384*B13*B2 +
        400*B6*B8 + 488*B3*B6 - 768*B2*B3*B8 - 390*B1*B2*B4 - 288*B1*B2*B3 -
        192*B3*B4*B8 - 144*B1*B10*B2 - 144*B1*B2*B5 - 96*B2*B3*B5 - 96*B2*B4*B8 -
        64*B2*B5*B6 - 48*B1*B2*B7 - 48*B1*B2*B4**2 - 40*B1*B2*B6 - 36*B1*B4*B5 -
        36*B1*B4*B6 + 32*B2*B3*B6 + 32*B4*B6*B2**2 + 48*B3*B4*B2**2 + 60*B2*B4*B5 +
        64*B1*B6*B2**2 + 72*B1*B4*B8 + 72*B2*B4*B7 + 72*B2*B4*B1**2 + 96*B10*B2*B4 +
        96*B3*B4*B5 + 96*B3*B4*B6 + 192*B1*B2*B9 + 192*B10*B2*B3 + 288*B2*B3*B7 +
        384*B1*B2*B8 + 540*B1*B3*B4 + 660*B2*B3*B4 - 192*B1*B2*B3*B4)/3
    )
    out[11] = (
        1 - 2*B1 - 2*B2 + 4*B3
    )
    out[12] = (
        -3 - 36*B3 - 32*B9 - 8*B6 + 12*B1 + 12*B2 + 16*B7 + 16*B8 + 24*B5 - B4*(12*B1 +
        12*B2) + 24*B3*B4
    )
    out[13] = (
        2 - 8*B5 - 6*B1 - 6*B2 + 2*B4 + 12*B3 + 4*B1*B2
    )
    out[14] = (
        4*1j*(-1 - 24*B13 - 14*B6 - 12*B3 - 6*B5 - 6*B1**2 + 3*B2 + 5*B1 + 6*B4 + 12*B8
        + 12*B3**2 + 24*B7 - 12*B1*B4 - 12*B1*B8 - 6*B2*B3 - 6*B2*B4 + 3*B1*B2 + 4*B1*B6
        + 6*B1*B3 + 6*B3*B4 + 12*B1*B5 + 6*B1*B2*B4)/3
    )
    out[15] = (
        4*1j*(-1 - 24*B14 - 14*B6 - 12*B3 - 6*B5 - 6*B2**2 + 3*B1 + 5*B2 + 6*B4 + 12*B7
        + 12*B3**2 + 24*B8 - 12*B2*B4 - 12*B2*B7 - 6*B1*B3 - 6*B1*B4 + 3*B1*B2 + 4*B2*B6
        + 6*B2*B3 + 6*B3*B4 + 12*B2*B5 + 6*B1*B2*B4)/3
    )
    out[16] = (
        4*1j*(-9 - 96*B15 - 24*B11 - 24*B14 - 24*B3 - 18*B6 - 12*B7 - 12*B3**2 + 6*B5 +
        6*B1**2 + 6*B4**2 + 15*B1 + 18*B4 + 19*B2 + 24*B10 + 96*B13 - 48*B1*B5 -
        30*B2*B4 - 24*B1*B4 - 12*B1*B10 - 12*B2*B7 - 12*B4*B5 - 12*B4*B6 - 11*B1*B2 -
        6*B1*B3 - 6*B1*B4**2 - 4*B2*B6 + 6*B2*B3 + 6*B4*B1**2 + 12*B2*B5 + 24*B1*B8 +
        24*B4*B7 + 42*B3*B4 + 48*B1*B9 + 48*B3*B7 - 24*B1*B3*B4 + 8*B1*B2*B6 +
        12*B1*B2*B4)/3
    )
    out[17] = (
        4*1j*(-9 - 96*B16 - 24*B12 - 24*B13 - 24*B3 - 18*B6 - 12*B8 - 12*B3**2 + 6*B5 +
        6*B2**2 + 6*B4**2 + 15*B2 + 18*B4 + 19*B1 + 24*B10 + 96*B14 - 48*B2*B5 -
        30*B1*B4 - 24*B2*B4 - 12*B1*B8 - 12*B10*B2 - 12*B4*B5 - 12*B4*B6 - 11*B1*B2 -
        6*B2*B3 - 6*B2*B4**2 - 4*B1*B6 + 6*B1*B3 + 6*B4*B2**2 + 12*B1*B5 + 24*B2*B7 +
        24*B4*B8 + 42*B3*B4 + 48*B2*B9 + 48*B3*B8 - 24*B2*B3*B4 + 8*B1*B2*B6 +
        12*B1*B2*B4)/3
    )
    return out


def l_from_b(v, verbatim: bool = False) -> np.ndarray:
    """L1..L18 from B1..B18.

    With ``verbatim=True`` the reference L10 and L11 are used as transcribed.
    """
    out = _l_reference(v)
    if verbatim:
        return out
    B17, B18 = v[16], v[17]
    L = out.copy()
    L4, L7, L12 = L[3], L[6], L[11]
    L15, L16, L17, L18 = L[14], L[15], L[16], L[17]
    out[9] = L4 * L18 - L12 * L15 + 1j * (8192 * B17 - _p17(L)) / 16
    out[10] = L7 * L17 - L12 * L16 + 1j * (8192 * B18 - _p18(L)) / 16
    return out
