//! Parsers for command-line values.

use num_complex::Complex;

/// `"re"`, `"re+imi"`, `"re-imi"`, `"imi"` or `"i"`.
pub fn parse_complex(s: &str) -> Result<Complex<f64>, String> {
    let t = s.trim();
    let bad = || format!("invalid number {s:?} (expected re, re+imi or imi)");
    let Some(body) = t.strip_suffix('i') else {
        return t
            .parse::<f64>()
            .ok()
            .filter(|re| re.is_finite())
            .map(|re| Complex::new(re, 0.0))
            .ok_or_else(bad);
    };
    // Split at the last sign that is not part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().map_err(|_| bad())?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    if !(re.is_finite() && im.is_finite()) {
        return Err(bad());
    }
    Ok(Complex::new(re, im))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficient {
    P,
    Q,
    A,
    B,
}

impl Coefficient {
    pub fn name(self) -> &'static str {
        match self {
            Coefficient::P => "p",
            Coefficient::Q => "q",
            Coefficient::A => "a",
            Coefficient::B => "b",
        }
    }
}

/// One axis of a grid: `n` equally spaced values from `lo` to `hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub coefficient: Coefficient,
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Axis {
    pub fn value(&self, k: usize) -> f64 {
        if self.n == 1 {
            self.lo
        } else {
            self.lo + (self.hi - self.lo) * k as f64 / (self.n - 1) as f64
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|k| self.value(k))
    }
}

/// `"p=-3:3:61,b=-3:3:61"`.
pub fn parse_grid(s: &str) -> Result<Vec<Axis>, String> {
    let mut axes: Vec<Axis> = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, range) = part
            .split_once('=')
            .ok_or_else(|| format!("grid axis {part:?} lacks '='"))?;
        let coefficient = match name.trim() {
            "p" => Coefficient::P,
            "q" => Coefficient::Q,
            "a" => Coefficient::A,
            "b" => Coefficient::B,
            other => {
                return Err(format!(
                    "unknown grid coefficient {other:?} (expected p, q, a or b)"
                ))
            }
        };
        if axes.iter().any(|a| a.coefficient == coefficient) {
            return Err(format!("grid coefficient {name} given twice"));
        }
        let fields: Vec<&str> = range.split(':').collect();
        let [lo, hi, n] = fields[..] else {
            return Err(format!("grid axis {part:?} must be name=lo:hi:n"));
        };
        let num = |v: &str| v.trim().parse::<f64>().ok().filter(|x| x.is_finite());
        let (Some(lo), Some(hi)) = (num(lo), num(hi)) else {
            return Err(format!("grid axis {part:?} has a non-numeric bound"));
        };
        let n = n
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| format!("grid axis {part:?} needs n >= 1"))?;
        axes.push(Axis {
            coefficient,
            lo,
            hi,
            n,
        });
    }
    if axes.is_empty() {
        return Err("empty grid".to_string());
    }
    Ok(axes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let c = Complex::new;
        assert_eq!(parse_complex("-2"), Ok(c(-2.0, 0.0)));
        assert_eq!(parse_complex("1+2i"), Ok(c(1.0, 2.0)));
        assert_eq!(parse_complex("1-2.5i"), Ok(c(1.0, -2.5)));
        assert_eq!(parse_complex("-i"), Ok(c(0.0, -1.0)));
        assert_eq!(parse_complex("i"), Ok(c(0.0, 1.0)));
        assert_eq!(parse_complex("3i"), Ok(c(0.0, 3.0)));
        assert_eq!(parse_complex("1e-3+2e+1i"), Ok(c(1e-3, 20.0)));
        assert_eq!(parse_complex("-1e-3-i"), Ok(c(-1e-3, -1.0)));
        assert!(parse_complex("x").is_err());
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("nan").is_err());
        assert!(parse_complex("inf").is_err());
    }

    #[test]
    fn grids() {
        let g = parse_grid("p=-3:3:61,b=-3:3:61").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].value(0), -3.0);
        assert_eq!(g[0].value(30), 0.0);
        assert_eq!(g[0].value(60), 3.0);
        assert_eq!(g[1].coefficient, Coefficient::B);
        assert!(parse_grid("p=1:2").is_err());
        assert!(parse_grid("z=1:2:3").is_err());
        assert!(parse_grid("p=1:2:0").is_err());
        assert!(parse_grid("p=1:2:3,p=0:1:2").is_err());
        assert_eq!(
            parse_grid("q=2:5:1").unwrap()[0]
                .values()
                .collect::<Vec<_>>(),
            vec![2.0]
        );
    }
}
