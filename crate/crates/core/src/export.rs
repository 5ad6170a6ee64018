//! Text formats: Seidel matrices as CSV or JSON cells, frame vectors as
//! `re,im` CSV, and fixed-precision float rendering.

use serde::{Deserialize, Serialize};

use crate::eisenstein::EisensteinInt;
use crate::error::Error;
use crate::matrix::{Scalar, SeidelMatrix, SeidelMatrixEis, SeidelMatrixInt, SquareMatrix};
use crate::numeric::FrameVectors;

/// Significant digits in every printed float.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` with [`SIGNIFICANT_DIGITS`] significant digits, plain decimal
/// notation for moderate exponents, trailing zeros dropped.
pub fn format_float(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let out = if (-6..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    };
    if out == "-0" {
        "0".into()
    } else {
        out
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `x` rounded to [`SIGNIFICANT_DIGITS`] digits, for JSON output.
pub fn round_float(x: f64) -> f64 {
    format_float(x).parse().unwrap_or(x)
}

pub fn matrix_to_csv<T: Scalar>(m: &SquareMatrix<T>) -> String {
    m.rows().map(|row| row.iter().map(|x| x.cell()).collect::<Vec<_>>().join(",") + "\n").collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub entries: Vec<Vec<String>>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<i64>,
}

impl MatrixDocument {
    pub fn new<T: Scalar>(m: &SquareMatrix<T>, mu: Option<i64>) -> Self {
        MatrixDocument { entries: m.rows().map(|row| row.iter().map(|x| x.cell()).collect()).collect(), n: m.n(), mu }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if doc.entries.len() != doc.n {
            return Err(Error::Dimension(format!("\"n\" is {} but there are {} rows", doc.n, doc.entries.len())));
        }
        Ok(doc)
    }

    pub fn from_csv(text: &str) -> Result<Self, Error> {
        let entries: Vec<Vec<String>> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(',').map(|c| c.trim().to_string()).collect())
            .collect();
        Ok(MatrixDocument { n: entries.len(), entries, mu: None })
    }

    /// The matrix over the smallest ring holding every cell.
    pub fn to_seidel(&self) -> Result<ParsedMatrix, Error> {
        let cells: Result<Vec<Vec<EisensteinInt>>, Error> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| EisensteinInt::parse_cell(c).ok_or_else(|| Error::Parse(format!("bad matrix cell `{c}`"))))
                    .collect()
            })
            .collect();
        let cells = cells?;
        if cells.iter().flatten().all(|z| z.is_rational()) {
            let rows = cells.iter().map(|row| row.iter().map(|z| z.a).collect()).collect();
            Ok(ParsedMatrix::Int(SeidelMatrix::new(SquareMatrix::from_rows(rows)?)?))
        } else {
            Ok(ParsedMatrix::Eisenstein(SeidelMatrix::new(SquareMatrix::from_rows(cells)?)?))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ParsedMatrix {
    Int(SeidelMatrixInt),
    Eisenstein(SeidelMatrixEis),
}

/// One line per frame vector `f_i`: `re,im` for each component.
pub fn frame_to_csv(frame: &FrameVectors) -> String {
    (0..frame.n)
        .map(|i| {
            frame
                .frame_vector(i)
                .iter()
                .map(|z| format!("{},{}", format_float(z.re), format_float(z.im)))
                .collect::<Vec<_>>()
                .join(",")
                + "\n"
        })
        .collect()
}
