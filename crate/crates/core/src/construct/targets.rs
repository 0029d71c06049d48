//! Leading Fourier vectors used to fix normalizations.
//!
//! Vectors are written in `q`-units (`q_i = Q_i²`, `r = R²`) unless the
//! name says otherwise; [`LeadingSpec::in_q_units`] converts.

use num_rational::BigRational;

use crate::laurent::RPoly;

/// A target coefficient vector at one `(a, b)` slot, in `Q`-units.
#[derive(Clone, Debug, PartialEq)]
pub struct LeadingSpec {
    pub slot: (u32, u32),
    pub vector: Vec<RPoly<BigRational>>,
}

impl LeadingSpec {
    /// From entries given as `(r-exponent, coefficient)` lists at
    /// `q_1^n q_2^m`.
    pub fn in_q_units(n: u32, m: u32, entries: &[&[(i32, i64)]]) -> Self {
        LeadingSpec {
            slot: (2 * n, 2 * m),
            vector: entries
                .iter()
                .map(|t| {
                    let doubled: Vec<(i32, i64)> = t.iter().map(|&(e, c)| (2 * e, c)).collect();
                    RPoly::from_ints(&doubled)
                })
                .collect(),
        }
    }

    /// From entries given as `(R-exponent, coefficient)` lists at `Q_1^a Q_2^b`.
    pub fn in_big_q_units(a: u32, b: u32, entries: &[&[(i32, i64)]]) -> Self {
        LeadingSpec {
            slot: (a, b),
            vector: entries.iter().map(|t| RPoly::from_ints(t)).collect(),
        }
    }
}

const Z: &[(i32, i64)] = &[];

fn sym(v: i64) -> [(i32, i64); 2] {
    [(1, v), (-1, v)]
}

fn anti(v: i64) -> [(i32, i64); 2] {
    [(1, v), (-1, -v)]
}

/// `x r + y + x r⁻¹`.
fn palin(x: i64, y: i64) -> [(i32, i64); 3] {
    [(1, x), (0, y), (-1, x)]
}

pub fn chi8_8() -> LeadingSpec {
    LeadingSpec::in_q_units(
        1,
        1,
        &[Z, Z, &palin(1, -2), &anti(3), &palin(4, 10), &anti(3), &palin(1, -2), Z, Z],
    )
}

pub fn chi4_10() -> LeadingSpec {
    LeadingSpec::in_q_units(
        1,
        1,
        &[&palin(1, -2), &anti(2), &palin(3, 18), &anti(2), &palin(1, -2)],
    )
}

pub fn chi12() -> LeadingSpec {
    LeadingSpec::in_q_units(1, 1, &[&palin(1, 10)])
}

pub fn chi12_2() -> LeadingSpec {
    LeadingSpec::in_big_q_units(
        1,
        1,
        &[Z, Z, Z, &anti(2), &sym(9), &anti(12), Z, &anti(-12), &sym(-9), &anti(-2), Z, Z, Z],
    )
}

pub fn chi6_5() -> LeadingSpec {
    LeadingSpec::in_big_q_units(
        1,
        1,
        &[&anti(2), &sym(6), &anti(5), Z, &anti(5), &sym(6), &anti(2)],
    )
}

/// `G_1, G_2` spanning `S_{8,10}`.
pub fn s8_10() -> Vec<LeadingSpec> {
    vec![
        LeadingSpec::in_q_units(
            1,
            1,
            &[
                &palin(1, -2),
                &anti(4),
                &palin(9, 34),
                &anti(13),
                &palin(15, -30),
                &anti(13),
                &palin(9, 34),
                &anti(4),
                &palin(1, -2),
            ],
        ),
        LeadingSpec::in_q_units(
            1,
            1,
            &[
                &palin(3, -6),
                &anti(12),
                &palin(22, 52),
                &anti(24),
                &palin(25, -50),
                &anti(24),
                &palin(22, 52),
                &anti(12),
                &palin(3, -6),
            ],
        ),
    ]
}

/// `G_1, G_2` spanning `S_{6,12}`.
pub fn s6_12() -> Vec<LeadingSpec> {
    vec![
        LeadingSpec::in_q_units(
            1,
            1,
            &[
                &palin(2, 20),
                &anti(6),
                &palin(33, -66),
                &anti(56),
                &palin(33, -66),
                &anti(6),
                &palin(2, 20),
            ],
        ),
        LeadingSpec::in_q_units(1, 1, &[Z, Z, &palin(1, -2), &anti(2), &palin(1, -2), Z, Z]),
    ]
}

/// `E_1, E_2, E_3` spanning `S_{4,16}`.
pub fn s4_16() -> Vec<LeadingSpec> {
    vec![
        LeadingSpec::in_q_units(
            1,
            1,
            &[&palin(1, 10), &anti(2), &palin(3, -6), &anti(2), &palin(1, 10)],
        ),
        LeadingSpec::in_q_units(
            1,
            1,
            &[&palin(1, 10), &anti(2), &palin(3, -42), &anti(2), &palin(1, 10)],
        ),
        LeadingSpec::in_q_units(
            1,
            1,
            &[&palin(5, 104), &anti(10), &palin(15, -138), &anti(10), &palin(5, 104)],
        ),
    ]
}

fn quint(c: [i64; 5]) -> [(i32, i64); 5] {
    [(2, c[0]), (1, c[1]), (0, c[2]), (-1, c[3]), (-2, c[4])]
}

/// The `q_1² q_2` coefficient vectors of `E_1` and `E_3`.
pub fn s4_16_second() -> [LeadingSpec; 2] {
    let e1 = LeadingSpec::in_q_units(
        2,
        1,
        &[
            &quint([14, 616, 4212, 616, 14]),
            &quint([28, 856, 0, -856, -28]),
            &quint([54, 1008, -2124, 1008, 54]),
            &quint([40, 304, 0, -304, -40]),
            &quint([10, 152, 2268, 152, 10]),
        ],
    );
    let e3 = LeadingSpec::in_q_units(
        2,
        1,
        &[
            &quint([70, 7616, 36612, 7616, 70]),
            &quint([140, 13352, 0, -13352, -140]),
            &quint([486, 17136, 21780, 17136, 486]),
            &quint([416, 7568, 0, -7568, -416]),
            &quint([104, 3784, 16848, 3784, 104]),
        ],
    );
    [e1, e3]
}
