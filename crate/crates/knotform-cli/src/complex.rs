//! Complex numbers written as `a`, `bi`, `a+bi`, `a-i` or `exp(i*x)`.

use num_complex::Complex64;

pub fn parse_complex(text: &str) -> Result<Complex64, String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("cannot read {text:?} as a complex number");
    if s.is_empty() {
        return Err(bad());
    }
    if let Some(arg) = s.strip_prefix("exp(i*").and_then(|r| r.strip_suffix(')')) {
        let th: f64 = arg.parse().map_err(|_| bad())?;
        return Ok(Complex64::from_polar(1.0, th));
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    // split at the last sign that is not part of an exponent
    let bytes = body.as_bytes();
    let mut cut = 0;
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            cut = k;
            break;
        }
    }
    let (re, im) = body.split_at(cut);
    let re: f64 = if re.is_empty() { 0.0 } else { re.parse().map_err(|_| bad())? };
    let im: f64 = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        x => x.parse().map_err(|_| bad())?,
    };
    Ok(Complex64::new(re, im))
}
