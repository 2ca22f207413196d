use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Field elements are arbitrary-precision rationals. Over a prime field they
/// are kept as integers in `[0, p)`.
pub type Scalar = BigRational;

/// The active ground field. All arithmetic on [`Scalar`]s goes through it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut q = 2u64;
    while q.saturating_mul(q) <= p {
        if p.is_multiple_of(q) {
            return false;
        }
        q += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::InvalidField(format!("{p} is not prime")))
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.reduce_int(BigInt::from(v))
    }

    fn reduce_int(&self, n: BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::from_integer(n),
            Field::Prime(p) => Scalar::from_integer(n.mod_floor(&BigInt::from(*p))),
        }
    }

    /// Maps a rational number into the field. Fails over GF(p) when the
    /// denominator is divisible by p.
    pub fn embed(&self, q: &BigRational) -> Option<Scalar> {
        match self {
            Field::Rational => Some(q.clone()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let den = q.denom().mod_floor(&p);
                let inv = mod_inverse(&den, &p)?;
                Some(Scalar::from_integer((q.numer() * inv).mod_floor(&p)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a + b,
            Field::Prime(_) => self.reduce_int(a.numer() + b.numer()),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a - b,
            Field::Prime(_) => self.reduce_int(a.numer() - b.numer()),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match self {
            Field::Rational => a * b,
            Field::Prime(_) => self.reduce_int(a.numer() * b.numer()),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self {
            Field::Rational => -a,
            Field::Prime(_) => self.reduce_int(-a.numer()),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rational => Some(a.recip()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                mod_inverse(a.numer(), &p).map(Scalar::from_integer)
            }
        }
    }

    /// Whether `a` is a valid normalized element of this field.
    pub fn contains(&self, a: &Scalar) -> bool {
        match self {
            Field::Rational => true,
            Field::Prime(p) => a.is_integer() && !a.numer().is_negative() && a.numer() < &BigInt::from(*p),
        }
    }

    /// Parses `"3/7"`, `"-2"` or `"5"` and embeds the value into the field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        let t = s.trim();
        let q = match t.split_once('/') {
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim())
                    .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
                let d = BigInt::from_str(d.trim())
                    .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(
                BigInt::from_str(t).map_err(|_| Error::Parse(format!("bad scalar `{s}`")))?,
            ),
        };
        self.embed(&q)
            .ok_or_else(|| Error::Parse(format!("`{s}` is not defined in {self}")))
    }

    pub fn format_scalar(&self, a: &Scalar) -> String {
        a.to_string()
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let a = a.mod_floor(p);
    if a.is_zero() {
        return None;
    }
    let g = a.extended_gcd(p);
    if !g.gcd.is_one() {
        return None;
    }
    Some(g.x.mod_floor(p))
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "rational" => Ok(Field::Rational),
            other => match other.strip_prefix("prime:") {
                Some(p) => {
                    let p = p
                        .parse::<u64>()
                        .map_err(|_| Error::InvalidField(format!("bad prime in `{s}`")))?;
                    Field::prime(p)
                }
                None => Err(Error::InvalidField(format!(
                    "expected `rational` or `prime:<p>`, got `{s}`"
                ))),
            },
        }
    }
}
