//! Parabolic J-matrix entries, written in the true anomaly.

use crate::dd::{pw, r, Dd};

/// Upper triangle of J at true anomaly `f`, |f| < π.
pub(super) fn upper(f: f64) -> [[Dd; 6]; 6] {
    let t = Dd::from(libm::tan(0.5 * f));
    let c2 = 1.0 / (1.0 + t * t);
    let c = c2.sqrt();
    let s = t * c;
    let w = 2.0 * c2;
    let (w3, w4, w5, w6) = (pw(w, 3), pw(w, 4), pw(w, 5), pw(w, 6));
    let (c4, c6, c8) = (pw(c, 4), pw(c, 6), pw(c, 8));
    let (c10, c12, c14, c15) = (pw(c, 10), pw(c, 12), pw(c, 14), pw(c, 15));
    let (t3, t5, t7, t9, t11) = (pw(t, 3), pw(t, 5), pw(t, 7), pw(t, 9), pw(t, 11));

    let mut j = [[Dd::ZERO; 6]; 6];
    j[0][0] = -s / (144144000.0 * c15)
        * (237568.0 * c14 + 118784.0 * c12 + 89088.0 * c10 - 1847680.0 * c8 + 185080.0 * c6 + 166572.0 * c4
            - 72534.0 * c2
            - 3003.0);
    j[0][1] = 1.0 / (25.0 * w5) + 3.0 / (20.0 * w4) - 4.0 / (15.0 * w3) - 1.0 / (15.0 * w6);
    j[0][2] = 1.0 / (10.0 * w4) + 2.0 / (25.0 * w5) - 1.0 / (15.0 * w6);
    j[0][3] = -s / (48048000.0 * c15)
        * (51456.0 * c14 + 25728.0 * c12 + 19296.0 * c10 + 977040.0 * c8 + 104160.0 * c6
            - 26376.0 * c4
            - 24178.0 * c2
            - 1001.0);
    j[1][1] = t11 / 352.0 + r(5.0, 288.0) * t9 + t7 / 112.0 + t5 / 80.0 + r(13.0, 96.0) * t3 + r(9.0, 32.0) * t;
    j[1][2] = t11 / 352.0 + r(5.0, 288.0) * t9 + r(3.0, 112.0) * t7 - t5 / 80.0 - r(7.0, 96.0) * t3 - r(3.0, 32.0) * t;
    j[1][3] = -4.0 / (25.0 * w5) - 1.0 / (10.0 * w4) + 2.0 / (5.0 * w3) - 1.0 / (15.0 * w6);
    j[2][2] = t11 / 352.0 + r(5.0, 288.0) * t9 + r(5.0, 112.0) * t7 + t5 / 16.0 + r(5.0, 96.0) * t3 + t / 32.0;
    // printed with a doubled minus before the w⁻⁶ term; a single minus is correct
    j[2][3] = -3.0 / (25.0 * w5) - 3.0 / (20.0 * w4) - 1.0 / (15.0 * w6);
    j[3][3] = s / (144144000.0 * c15)
        * (1759232.0 * c14
            + 879616.0 * c12
            + 659712.0 * c10
            + 4874080.0 * c8
            + 1562120.0 * c6
            + 324828.0 * c4
            + 72534.0 * c2
            + 3003.0);
    j[4][4] = t9 / 72.0 + r(3.0, 56.0) * t7 + r(3.0, 40.0) * t5 + t3 / 24.0;
    j[4][5] = 1.0 / (5.0 * w5) - 1.0 / (4.0 * w4);
    j[5][5] = t11 / 352.0 + t9 / 288.0 - t7 / 112.0 - t5 / 80.0 + t3 / 96.0 + t / 32.0;
    j
}
