//! Serde helpers representing a complex number as a `[re, im]` pair.

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serializer};

pub fn serialize<S: Serializer>(v: &Complex64, serializer: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&[v.re, v.im], serializer)
}

pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Complex64, D::Error> {
    let [re, im] = <[f64; 2]>::deserialize(deserializer)?;
    Ok(Complex64::new(re, im))
}
