//! Elliptic J-matrix entries, written in the eccentric anomaly.

use crate::dd::{pw, r, sin_cos, Dd};

/// Upper triangle of J at eccentric anomaly `ea` (0 < e < 1, e = 0 allowed).
pub(super) fn upper(e: f64, ea: f64) -> [[Dd; 6]; 6] {
    let (s, c) = sin_cos(ea);
    let (e, ea) = (Dd::from(e), Dd::from(ea));
    let q = 1.0 - e * e;
    let ee = ea * ea;
    let (e2, e3, e4, e5) = (e * e, pw(e, 3), pw(e, 4), pw(e, 5));
    let (e6, e7, e8) = (pw(e, 6), pw(e, 7), pw(e, 8));
    let (c2, c3, c4, c5) = (c * c, pw(c, 3), pw(c, 4), pw(c, 5));
    let q75 = pw(q, 7) * q.sqrt();
    let q55 = pw(q, 5) * q.sqrt();
    let q6 = pw(q, 6);

    let mut j = [[Dd::ZERO; 6]; 6];

    j[0][0] = -1.5 / q75
        * (-((-r(2.0, 15.0) * e4 - r(2.0, 15.0) * e2 + r(2.0, 15.0)) * s + e3 * ea) * e3 * c4
            - r(8.0, 3.0) * ((-r(5.0, 32.0) * e4 - e2 / 16.0 - r(5.0, 16.0)) * s + e * (1.0 + e2) * ea) * e2 * c3
            - 2.0
                * e
                * ((r(7.0, 9.0) - r(4.0, 45.0) * e6 + (ee - r(44.0, 45.0)) * e4 - r(7.0, 15.0) * e2) * s
                    - 6.5 * e3 * ea
                    - 4.0 * e * ea)
                * c2
            + ((1.0 - r(49.0, 24.0) * e6 + (3.0 * ee - r(187.0, 12.0)) * e4 - r(85.0, 12.0) * e2) * s
                - 8.0 * e * (1.0 + e4) * ea)
                * c
            + (r(16.0, 45.0) * e7
                + (-4.0 * ee + r(1016.0, 45.0)) * e5
                + (r(126.0, 5.0) + 6.0 * ee) * e3
                + r(128.0, 9.0) * e)
                * s
            + (-r(5.0, 3.0) - r(49.0, 24.0) * e6 + (ee - r(251.0, 12.0)) * e4 + (-r(63.0, 4.0) - 2.0 * ee) * e2) * ea);

    j[0][1] = 1.0 / (60.0 * q6)
        * (-12.0 * e3 * c5
            + (-15.0 * e6 + 45.0 * e4 + 75.0 * e2) * c4
            + (-40.0 * e5 - 100.0 * e3 - 140.0 * e) * c3
            + (-60.0 * e3 * (e2 - 2.0) * ea * s + 150.0 * e4 + 150.0 * e2 + 90.0) * c2
            + ((90.0 * e4 * ea - 360.0 * e2 * ea) * s - 120.0 * e5 + 240.0 * e3 + 300.0 * e) * c
            + 45.0
                * ((-e3 + 4.0 * e) * s * s - r(8.0, 3.0) * (e4 - 3.5 * e2 - 3.0) * ea * s + e * (e2 - 6.0) * ee)
                * e);

    j[0][2] = 1.0 / (60.0 * q6)
        * (-12.0 * e4 * c5
            + (30.0 * e5 + 75.0 * e3) * c4
            + (-100.0 * e4 - 180.0 * e2) * c3
            + (60.0 * e4 * ea * s + 180.0 * e3 + 210.0 * e) * c2
            + (-270.0 * e3 * ea * s + 120.0 * e4 + 420.0 * e2 - 120.0) * c
            + 135.0 * e3 * s * s
            + (120.0 * e4 * ea + 540.0 * e2 * ea) * s
            - 135.0 * e3 * ee
            - 90.0 * e * ee);

    j[0][3] = -1.5 / q75
        * (((-r(2.0, 15.0) * e4 + r(4.0, 15.0) * e6) * s - e5 * ea) * c4
            + r(4.0, 3.0)
                * e2
                * c3
                * ((-0.25 * e5 + r(3.0, 16.0) * e3 + r(9.0, 8.0) * e) * s + ea * (e4 - 4.0 * e2 - 1.0))
            - 2.0
                * ((e7 / 9.0 - r(8.0, 45.0) * e5 + e3 * (ee - r(86.0, 45.0)) + r(11.0, 9.0) * e) * s
                    + 2.0 * (e4 - 5.25 * e2 - 1.0) * ea)
                * e
                * c2
            + ((r(11.0, 6.0) * e7 - r(13.0, 8.0) * e5 + (3.0 * ee - r(275.0, 12.0)) * e3 - e) * s
                - 4.0 * ea * (1.0 + e2) * (1.0 + e2))
                * c
            + (r(16.0, 3.0) - r(4.0, 9.0) * e8 - r(298.0, 45.0) * e6
                + (r(1304.0, 45.0) - 4.0 * ee) * e4
                + (6.0 * ee + r(316.0, 9.0)) * e2)
                * s
            + e * ea * (r(11.0, 6.0) * e6 + r(41.0, 24.0) * e4 + (ee - r(129.0, 4.0)) * e2 - 2.0 * ee - r(35.0, 3.0)));

    j[1][1] = 0.5 / q55
        * ((-r(2.0, 5.0) * e3 * c4 + 2.5 * e2 * c3 - r(2.0, 3.0) * e * (e6 - 5.0 * e4 + r(39.0, 5.0) * e2 + 7.0) * c2
            + (e6 - 9.0 * e4 + r(75.0, 4.0) * e2 + 3.0) * c
            - r(4.0, 3.0) * e7
            + r(26.0, 3.0) * e5
            - r(22.0, 5.0) * e3
            - r(82.0, 3.0) * e)
            * s
            + ea * (e6 - 11.0 * e4 + r(83.0, 4.0) * e2 + 5.0));

    j[1][2] = -1.5 / q55
        * ((r(2.0, 15.0) * e4 * c4 - r(5.0, 6.0) * e3 * c3
            + (-r(2.0, 9.0) * e6 + r(28.0, 45.0) * e4 + 2.0 * e2) * c2
            + (e5 - 3.25 * e3 - r(7.0, 3.0) * e) * c
            - r(4.0, 9.0) * e6
            - r(34.0, 45.0) * e4
            + 8.0 * e2
            + r(4.0, 3.0))
            * s
            + e * ea * (e4 - r(31.0, 12.0) * e2 - r(11.0, 3.0)));

    j[1][3] = 1.0 / (60.0 * q6)
        * (-12.0 * e4 * c5
            + (-30.0 * e5 + 135.0 * e3) * c4
            + (40.0 * e6 - 100.0 * e4 - 220.0 * e2) * c3
            + (-60.0 * e2 * (e2 - 2.0) * ea * s - 120.0 * e5 + 465.0 * e3 - 90.0 * e) * c2
            + ((90.0 * e3 * ea - 360.0 * e * ea) * s - 60.0 * e2 + 480.0) * c
            - 120.0 * (e4 - 3.5 * e2 - 3.0) * ea * s
            + 45.0 * ((ee - 1.0) * e2 - 6.0 * ee + 4.0) * e);

    j[2][2] = 1.0 / (120.0 * q55)
        * ((-24.0 * e5 * c4 + 150.0 * e4 * c3 + (-32.0 * e5 - 400.0 * e3) * c2 + (225.0 * e4 + 600.0 * e2) * c
            - 64.0 * e5
            - 800.0 * e3
            - 600.0 * e)
            * s
            + 225.0 * e4 * ea
            + 600.0 * e2 * ea
            + 120.0 * ea);

    // the c³ and E·sinE terms read "cos 3E" and "E sin²E" in the printed table
    j[2][3] = 1.0 / (60.0 * q6)
        * (-12.0 * e5 * c5
            + (-15.0 * e6 + 120.0 * e4) * c4
            + (60.0 * e5 - 340.0 * e3) * c3
            + (60.0 * e3 * ea * s - 90.0 * e4 + 345.0 * e2) * c2
            + (-270.0 * e2 * ea * s + 180.0 * e3 + 240.0 * e) * c
            + (120.0 * e3 * ea + 540.0 * e * ea) * s
            + (135.0 - 135.0 * ee) * e2
            - 90.0 * ee);

    let g1 = -e6 / 15.0 * c4
        + (-e7 / 6.0 + 1.25 * e5 - r(43.0, 24.0) * e3) * c3
        + e2 * (-e6 / 9.0 + r(17.0, 15.0) * e4 + ee - r(28.0, 9.0) * e2 + r(4.0, 3.0)) * c2
        - 1.5 * e * (-r(7.0, 18.0) * e6 + r(37.0, 12.0) * e4 + ee - r(287.0, 72.0) * e2 - r(119.0, 18.0)) * c
        - r(2.0, 9.0) * e8
        - e6 / 15.0
        + r(103.0, 9.0) * e4
        + (2.0 * ee - r(79.0, 3.0)) * e2
        - 3.0 * ee
        - 16.0;
    let g2 =
        -e4 * c4 + (r(8.0, 3.0) * e5 - 8.0 * e3) * c3 + (-8.0 * e4 + 29.0 * e2) * c2 - 16.0 * e * c - r(7.0, 6.0) * e8
            + r(29.0, 4.0) * e6
            + r(27.0, 8.0) * e4
            + (ee - r(283.0, 6.0)) * e2
            - r(8.0, 3.0)
            - 2.0 * ee;
    j[3][3] = (3.0 * e * g1 * s - 1.5 * ea * g2) / q75;

    // sign of the printed J55 and J56 is reversed
    j[4][4] = 3.0 / (8.0 * (pw(q, 4) * q.sqrt()))
        * ((r(8.0, 15.0) * e3 * c4 - 2.0 * e2 * c3
            + (-r(8.0, 45.0) * e3 + r(8.0, 3.0) * e) * c2
            + (e2 - r(4.0, 3.0)) * c
            - r(16.0, 45.0) * e3
            - r(8.0, 3.0) * e)
            * s
            + ea * (e2 + r(4.0, 3.0)));
    j[4][5] = c / (4.0 * pw(q, 5))
        * (-r(4.0, 5.0) * e3 * c4 + (e4 + 3.0 * e2) * c3 + (-4.0 * e3 - 4.0 * e) * c2 + (6.0 * e2 + 2.0) * c - 4.0 * e);
    j[5][5] = 9.0 / (4.0 * q55)
        * ((-r(4.0, 45.0) * e3 * c4
            + (r(2.0, 9.0) * e4 + e2 / 3.0) * c3
            + (-r(4.0, 27.0) * e5 - r(136.0, 135.0) * e3 - r(4.0, 9.0) * e) * c2
            + (e4 + r(11.0, 6.0) * e2 + r(2.0, 9.0)) * c
            - r(8.0, 27.0) * e5
            - r(452.0, 135.0) * e3
            - r(16.0, 9.0) * e)
            * s
            + ea * (e4 + r(41.0, 18.0) * e2 + r(2.0, 9.0)));
    j
}
