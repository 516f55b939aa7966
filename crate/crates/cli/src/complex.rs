//! Complex numbers as `re+imj` strings.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

/// A complex number that serializes as `"re+imj"`. A bare real such as
/// `"0.5"` is also accepted on input.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cx(pub Complex64);

impl fmt::Display for Cx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Complex64 { re, im } = self.0;
        let sign = if im.is_sign_negative() { '-' } else { '+' };
        write!(f, "{re:?}{sign}{:?}j", im.abs())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCxError(String);

impl fmt::Display for ParseCxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{}` is not a complex number of the form re+imj", self.0)
    }
}

impl std::error::Error for ParseCxError {}

impl FromStr for Cx {
    type Err = ParseCxError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseCxError(s.to_string());
        let t = s.trim();
        let Some(body) = t.strip_suffix('j') else {
            return t.parse().map(|re| Cx(Complex64::new(re, 0.0))).map_err(|_| err());
        };
        // the sign that separates the parts is the last one not following an exponent marker
        let bytes = body.as_bytes();
        let split = (1..bytes.len())
            .rev()
            .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'))
            .ok_or_else(err)?;
        let re: f64 = body[..split].parse().map_err(|_| err())?;
        let im: f64 = body[split..].parse().map_err(|_| err())?;
        Ok(Cx(Complex64::new(re, im)))
    }
}

impl Serialize for Cx {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cx {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

impl From<Complex64> for Cx {
    fn from(z: Complex64) -> Self {
        Cx(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for z in [
            Complex64::new(0.5, 0.0),
            Complex64::new(-1.0, -2.5),
            Complex64::new(1e-20, -3e-300),
            Complex64::new(0.1 + 0.2, 1.0 / 3.0),
            Complex64::new(-0.0, -0.0),
        ] {
            let s = Cx(z).to_string();
            let back: Cx = s.parse().unwrap();
            assert_eq!(back.0.re.to_bits(), z.re.to_bits(), "{s}");
            assert_eq!(back.0.im.to_bits(), z.im.to_bits(), "{s}");
        }
        assert_eq!(Cx(Complex64::new(1.0, -2.0)).to_string(), "1.0-2.0j");
    }

    #[test]
    fn parses_reals_and_rejects_junk() {
        assert_eq!("0.25".parse::<Cx>().unwrap().0, Complex64::new(0.25, 0.0));
        assert_eq!("-1e-3+2E+1j".parse::<Cx>().unwrap().0, Complex64::new(-1e-3, 20.0));
        for bad in ["", "j", "1+j", "abc", "1+2i", "+3j"] {
            assert!(bad.parse::<Cx>().is_err(), "{bad}");
        }
    }
}
