use std::fmt;

use serde::{Deserialize, Serialize};

use crate::scalars::ParamScalar;

/// One term of an element in JSON form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub mu: i64,
    pub m: u32,
    pub n: u32,
    pub nu: i64,
    pub coeff: String,
}

/// Write `c1*M1 + c2*M2 - ...`; the unit monomial renders as `"1"`.
pub(crate) fn write_terms<'a, I>(f: &mut fmt::Formatter<'_>, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (String, &'a ParamScalar)>,
{
    let mut first = true;
    for (mono, c) in terms {
        let unit = mono == "1";
        let (neg, body) = if c.is_negative_monomial() { (true, (-c).to_string()) } else { (false, c.to_string()) };
        let coeff_is_one = body == "1";
        let text = if unit {
            if c.is_compound() && !first {
                format!("({body})")
            } else {
                body
            }
        } else if coeff_is_one {
            mono
        } else if c.is_compound() {
            format!("({body})*{mono}")
        } else {
            format!("{body}*{mono}")
        };
        match (first, neg) {
            (true, false) => write!(f, "{text}")?,
            (true, true) => write!(f, "-{text}")?,
            (false, false) => write!(f, " + {text}")?,
            (false, true) => write!(f, " - {text}")?,
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
