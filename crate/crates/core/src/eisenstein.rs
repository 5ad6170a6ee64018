use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

/// `a + b w` with `w = -1/2 + i sqrt(3)/2`, so `w^2 = -1 - w`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);
    pub const OMEGA2: Self = Self::new(-1, -1);

    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinInt { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        Self::new(a, 0)
    }

    pub fn conj(self) -> Self {
        Self::new(self.a - self.b, -self.b)
    }

    /// `|z|^2 = a^2 - ab + b^2`.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn is_rational(self) -> bool {
        self.b == 0
    }

    pub fn is_cube_root_of_unity(self) -> bool {
        self == Self::ONE || self == Self::OMEGA || self == Self::OMEGA2
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    pub fn to_complex(self) -> Complex64 {
        let h = 3f64.sqrt() / 2.0;
        Complex64::new(self.a as f64 - 0.5 * self.b as f64, h * self.b as f64)
    }

    /// `"0"`, `"1"`, `"w"`, `"w2"` for the standard cells; anything else in
    /// `a+bw` form.
    pub fn cell(self) -> String {
        match (self.a, self.b) {
            (0, 0) => "0".into(),
            (1, 0) => "1".into(),
            (0, 1) => "w".into(),
            (-1, -1) => "w2".into(),
            (a, 0) => a.to_string(),
            (a, b) => format!("{a}{b:+}w"),
        }
    }

    pub fn parse_cell(s: &str) -> Option<Self> {
        match s.trim() {
            "0" => Some(Self::ZERO),
            "1" => Some(Self::ONE),
            "-1" => Some(Self::from_int(-1)),
            "w" => Some(Self::OMEGA),
            "w2" => Some(Self::OMEGA2),
            _ => None,
        }
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.a + o.a, self.b + o.b)
    }
}

impl AddAssign for EisensteinInt {
    fn add_assign(&mut self, o: Self) {
        *self = *self + o;
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2
        let bd = self.b * o.b;
        Self::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
}

impl fmt::Debug for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cell())
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cell())
    }
}

impl Serialize for EisensteinInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.cell())
    }
}
