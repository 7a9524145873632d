//! Field descriptor strings: "p" for F_p, "p^n:c0,c1,...,cn" for F_{p^n}
//! with modulus coefficients listed low to high (cn = 1). Elements cross the
//! CLI boundary in the integer encoding.

use crate::ext::ExtField;
use crate::prime::PrimeField;
use crate::{FieldError, FiniteField};

/// A parsed field description, either a prime field or an explicit extension.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldDesc {
    Prime(PrimeField),
    Ext(ExtField),
}

impl FieldDesc {
    pub fn prime(&self) -> u64 {
        match self {
            FieldDesc::Prime(f) => f.modulus(),
            FieldDesc::Ext(f) => f.prime(),
        }
    }

    pub fn order(&self) -> u64 {
        match self {
            FieldDesc::Prime(f) => f.order(),
            FieldDesc::Ext(f) => f.order(),
        }
    }
}

pub fn parse_descriptor(s: &str) -> Result<FieldDesc, FieldError> {
    let s = s.trim();
    if let Some((head, coeffs)) = s.split_once(':') {
        let (p_str, n_str) = head
            .split_once('^')
            .ok_or_else(|| FieldError::BadDescriptor(s.to_string()))?;
        let p: u64 = p_str
            .trim()
            .parse()
            .map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        let n: usize = n_str
            .trim()
            .parse()
            .map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        let modulus: Vec<u64> = coeffs
            .split(',')
            .map(|c| c.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        if modulus.len() != n + 1 {
            return Err(FieldError::BadDescriptor(s.to_string()));
        }
        Ok(FieldDesc::Ext(ExtField::new(p, modulus)?))
    } else {
        let p: u64 = s
            .parse()
            .map_err(|_| FieldError::BadDescriptor(s.to_string()))?;
        Ok(FieldDesc::Prime(PrimeField::new(p)?))
    }
}

pub fn format_descriptor(desc: &FieldDesc) -> String {
    match desc {
        FieldDesc::Prime(f) => f.modulus().to_string(),
        FieldDesc::Ext(f) => {
            let coeffs: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
            format!("{}^{}:{}", f.prime(), f.ext_degree(), coeffs.join(","))
        }
    }
}
