//! Decimal formatting with 17 significant digits, enough to round-trip any
//! f64 exactly. Used for JSON and CSV output alike.

pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[cfg(test)]
mod tests {
    use super::fmt17;

    #[test]
    fn round_trips_doubles() {
        for v in [
            1.0,
            -0.1,
            2.0f64.sqrt(),
            std::f64::consts::PI,
            1.2345678901234567e-200,
            -9.87654321e200,
            0.0,
        ] {
            let back: f64 = fmt17(v).parse().unwrap();
            assert_eq!(back.to_bits(), v.to_bits(), "{v} -> {}", fmt17(v));
        }
    }
}
