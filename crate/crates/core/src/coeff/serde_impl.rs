//! JSON forms: a Laurent polynomial is an object mapping decimal exponent
//! strings to decimal coefficient strings (emitted in increasing exponent
//! order); a rational function is `{"num": ..., "den": ...}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, RationalFunction};

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<_> = self.terms().collect();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

struct LaurentVisitor;

impl<'de> Visitor<'de> for LaurentVisitor {
    type Value = LaurentPoly;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an object mapping exponent strings to coefficient strings")
    }

    fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LaurentPoly, A::Error> {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        while let Some((k, v)) = access.next_entry::<String, String>()? {
            let e: i64 = k.parse().map_err(de::Error::custom)?;
            let c: BigInt = v.parse().map_err(de::Error::custom)?;
            if terms.insert(e, c).is_some() {
                return Err(de::Error::custom(format!("duplicate exponent {e}")));
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        d.deserialize_map(LaurentVisitor)
    }
}

#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RationalRepr {
            num: self.numer().clone(),
            den: self.denom().clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RationalRepr::deserialize(d)?;
        if r.den.is_zero() {
            return Err(de::Error::custom("zero denominator"));
        }
        Ok(RationalFunction::new(r.num, r.den))
    }
}
