//! Hyperbolic J-matrix entries, written in the hyperbolic anomaly.

use crate::dd::{pw, r, sinh_cosh, Dd};

/// Upper triangle of J at hyperbolic anomaly `h` (e > 1).
pub(super) fn upper(e: f64, h: f64) -> [[Dd; 6]; 6] {
    let (s, c) = sinh_cosh(h);
    let (e, h) = (Dd::from(e), Dd::from(h));
    let q = e * e - 1.0;
    let hh = h * h;
    let (e2, e3, e4, e5) = (e * e, pw(e, 3), pw(e, 4), pw(e, 5));
    let (e6, e7, e8) = (pw(e, 6), pw(e, 7), pw(e, 8));
    let (c2, c3, c4, c5) = (c * c, pw(c, 3), pw(c, 4), pw(c, 5));
    let q75 = pw(q, 7) * q.sqrt();
    let q55 = pw(q, 5) * q.sqrt();
    let q6 = pw(q, 6);

    let mut j = [[Dd::ZERO; 6]; 6];

    j[0][0] = -1.5 / q75
        * (e3 * ((-r(2.0, 15.0) * e4 - r(2.0, 15.0) * e2 + r(2.0, 15.0)) * s + e3 * h) * c4
            + r(8.0, 3.0) * e2 * c3 * ((-r(5.0, 32.0) * e4 - e2 / 16.0 - r(5.0, 16.0)) * s + e * (e2 + 1.0) * h)
            - 2.0
                * e
                * ((-r(7.0, 9.0) + r(4.0, 45.0) * e6 + (hh + r(44.0, 45.0)) * e4 + r(7.0, 15.0) * e2) * s
                    + 6.5 * e3 * h
                    + 4.0 * e * h)
                * c2
            + ((-1.0 + r(49.0, 24.0) * e6 + (3.0 * hh + r(187.0, 12.0)) * e4 + r(85.0, 12.0) * e2) * s
                + 8.0 * e * (e4 + 1.0) * h)
                * c
            + (-r(16.0, 45.0) * e7 + (-4.0 * hh - r(1016.0, 45.0)) * e5 + (6.0 * hh - r(126.0, 5.0)) * e3
                - r(128.0, 9.0) * e)
                * s
            + h * (r(5.0, 3.0) + r(49.0, 24.0) * e6 + (hh + r(251.0, 12.0)) * e4 + (-2.0 * hh + r(63.0, 4.0)) * e2));

    j[0][1] = 1.0 / (60.0 * q6)
        * (-12.0 * e3 * c5
            + (-15.0 * e6 + 45.0 * e4 + 75.0 * e2) * c4
            + (-40.0 * e5 - 100.0 * e3 - 140.0 * e) * c3
            + (60.0 * e3 * (e2 - 2.0) * h * s + 195.0 * e4 - 30.0 * e2 + 90.0) * c2
            + ((-90.0 * e4 * h + 360.0 * e2 * h) * s - 120.0 * e5 + 240.0 * e3 + 300.0 * e) * c
            - 45.0 * e * h * ((-r(8.0, 3.0) * e4 + r(28.0, 3.0) * e2 + 8.0) * s + e * (e2 - 6.0) * h));

    j[0][2] = 1.0 / (60.0 * q6)
        * (-12.0 * e4 * c5
            + (30.0 * e5 + 75.0 * e3) * c4
            + (-100.0 * e4 - 180.0 * e2) * c3
            + (-60.0 * e4 * h * s + 45.0 * e3 + 210.0 * e) * c2
            + (270.0 * e3 * h * s + 120.0 * e4 + 420.0 * e2 - 120.0) * c
            + 135.0 * e * h * ((-r(8.0, 9.0) * e3 - 4.0 * e) * s + h * (e2 + r(2.0, 3.0))));

    j[0][3] = -1.5 / q75
        * (((-r(4.0, 15.0) * e6 + r(2.0, 15.0) * e4) * s + e5 * h) * c4
            - r(4.0, 3.0)
                * e2
                * c3
                * ((-0.25 * e5 + r(3.0, 16.0) * e3 + r(9.0, 8.0) * e) * s + h * (e4 - 4.0 * e2 - 1.0))
            - 2.0
                * ((-e7 / 9.0 + r(8.0, 45.0) * e5 + (hh + r(86.0, 45.0)) * e3 - r(11.0, 9.0) * e) * s
                    - 2.0 * h * (e4 - 5.25 * e2 - 1.0))
                * e
                * c2
            + ((-r(11.0, 6.0) * e7 + r(13.0, 8.0) * e5 + (r(275.0, 12.0) + 3.0 * hh) * e3 + e) * s
                + 4.0 * (e2 + 1.0) * (e2 + 1.0) * h)
                * c
            + (-r(16.0, 3.0)
                + r(4.0, 9.0) * e8
                + r(298.0, 45.0) * e6
                + (-4.0 * hh - r(1304.0, 45.0)) * e4
                + (-r(316.0, 9.0) + 6.0 * hh) * e2)
                * s
            + e * h * (-r(11.0, 6.0) * e6 - r(41.0, 24.0) * e4 + (r(129.0, 4.0) + hh) * e2 + r(35.0, 3.0) - 2.0 * hh));

    j[1][1] = -0.5 / q55
        * ((-r(2.0, 5.0) * e3 * c4 + 2.5 * e2 * c3 - r(2.0, 3.0) * e * c2 * (e6 - 5.0 * e4 + r(39.0, 5.0) * e2 + 7.0)
            + (e6 - 9.0 * e4 + r(75.0, 4.0) * e2 + 3.0) * c
            - r(4.0, 3.0) * e7
            + r(26.0, 3.0) * e5
            - r(22.0, 5.0) * e3
            - r(82.0, 3.0) * e)
            * s
            + h * (e6 - 11.0 * e4 + r(83.0, 4.0) * e2 + 5.0));

    j[1][2] = 1.5 / q55
        * ((r(2.0, 15.0) * e4 * c4 - r(5.0, 6.0) * e3 * c3
            + (-r(2.0, 9.0) * e6 + r(28.0, 45.0) * e4 + 2.0 * e2) * c2
            + (e5 - 3.25 * e3 - r(7.0, 3.0) * e) * c
            - r(4.0, 9.0) * e6
            - r(34.0, 45.0) * e4
            + 8.0 * e2
            + r(4.0, 3.0))
            * s
            + e * h * (e4 - r(31.0, 12.0) * e2 - r(11.0, 3.0)));

    j[1][3] = 1.0 / (60.0 * q6)
        * (-12.0 * e4 * c5
            + (-30.0 * e5 + 135.0 * e3) * c4
            + (40.0 * e6 - 100.0 * e4 - 220.0 * e2) * c3
            + (60.0 * e2 * (e2 - 2.0) * h * s - 120.0 * e5 + 465.0 * e3 - 90.0 * e) * c2
            + ((-90.0 * e3 * h + 360.0 * e * h) * s - 60.0 * e2 + 480.0) * c
            - 45.0 * h * ((-r(8.0, 3.0) * e4 + r(28.0, 3.0) * e2 + 8.0) * s + e * (e2 - 6.0) * h));

    j[2][2] = 1.0 / (120.0 * q55)
        * ((24.0 * e5 * c4 - 150.0 * e4 * c3
            + (32.0 * e5 + 400.0 * e3) * c2
            + (-225.0 * e4 - 600.0 * e2) * c
            + 64.0 * e5
            + 800.0 * e3
            + 600.0 * e)
            * s
            - 225.0 * e4 * h
            - 600.0 * e2 * h
            - 120.0 * h);

    j[2][3] = 1.0 / (60.0 * q6)
        * (-12.0 * e5 * c5
            + (-15.0 * e6 + 120.0 * e4) * c4
            + (60.0 * e5 - 340.0 * e3) * c3
            + (-60.0 * e3 * h * s - 90.0 * e4 + 345.0 * e2) * c2
            + (270.0 * e2 * h * s + 180.0 * e3 + 240.0 * e) * c
            + 135.0 * h * ((-r(8.0, 9.0) * e3 - 4.0 * e) * s + h * (e2 + r(2.0, 3.0))));

    // the printed sinh group repeats a trailing e·cosh H factor; the H group carries −1/2
    let g1 = e6 / 15.0 * c4
        + (e7 / 6.0 - 1.25 * e5 + r(43.0, 24.0) * e3) * c3
        + e2 * (e6 / 9.0 - r(17.0, 15.0) * e4 + hh + r(28.0, 9.0) * e2 - r(4.0, 3.0)) * c2
        - 1.5 * e * c * (r(7.0, 18.0) * e6 - r(37.0, 12.0) * e4 + hh + r(287.0, 72.0) * e2 + r(119.0, 18.0))
        + r(2.0, 9.0) * e8
        + e6 / 15.0
        - r(103.0, 9.0) * e4
        + (2.0 * hh + r(79.0, 3.0)) * e2
        - 3.0 * hh
        + 16.0;
    let g2 =
        e4 * c4 + (8.0 * e3 - r(8.0, 3.0) * e5) * c3 + (8.0 * e4 - 29.0 * e2) * c2 + 16.0 * e * c + r(7.0, 6.0) * e8
            - r(29.0, 4.0) * e6
            - r(27.0, 8.0) * e4
            + (hh + r(283.0, 6.0)) * e2
            + r(8.0, 3.0)
            - 2.0 * hh;
    j[3][3] = (3.0 * e * g1 * s - 1.5 * h * g2) / q75;

    j[4][4] = 3.0 / (8.0 * (pw(q, 4) * q.sqrt()))
        * ((r(8.0, 15.0) * e3 * c4 - 2.0 * e2 * c3
            + (-r(8.0, 45.0) * e3 + r(8.0, 3.0) * e) * c2
            + (e2 - r(4.0, 3.0)) * c
            - r(16.0, 45.0) * e3
            - r(8.0, 3.0) * e)
            * s
            + h * (e2 + r(4.0, 3.0)));
    j[4][5] = -c / (4.0 * pw(q, 5))
        * (-r(4.0, 5.0) * e3 * c4 + (e4 + 3.0 * e2) * c3 + (-4.0 * e3 - 4.0 * e) * c2 + (6.0 * e2 + 2.0) * c - 4.0 * e);
    j[5][5] = -9.0 / (4.0 * q55)
        * ((-r(4.0, 45.0) * e3 * c4
            + (r(2.0, 9.0) * e4 + e2 / 3.0) * c3
            + (-r(4.0, 27.0) * e5 - r(136.0, 135.0) * e3 - r(4.0, 9.0) * e) * c2
            + (e4 + r(11.0, 6.0) * e2 + r(2.0, 9.0)) * c
            - r(8.0, 27.0) * e5
            - r(452.0, 135.0) * e3
            - r(16.0, 9.0) * e)
            * s
            + h * (e4 + r(41.0, 18.0) * e2 + r(2.0, 9.0)));
    j
}
