use crate::dplusm::Generator;
use crate::semistar::{apply, IdealHandle, SemistarOp};
use crate::{Error, Result};

/// The laws every semistar operation obeys, checked on one input triple.
/// Returns the name of the first law that fails.
pub fn check_laws(op: &SemistarOp, e: &IdealHandle, f: &IdealHandle, x: &Generator) -> Result<Option<&'static str>> {
    let st = |m: &IdealHandle| apply(op, m);
    let es = st(e)?;
    let fs = st(f)?;

    if st(&e.scale(x)?)? != es.scale(x)? {
        return Ok(Some("(xE)* = xE*"));
    }
    let sum = e.sum(f)?;
    let sums = st(&sum)?;
    if !es.is_subset(&sums)? || !fs.is_subset(&sums)? {
        return Ok(Some("E <= F implies E* <= F*"));
    }
    if e.is_subset(f)? && !es.is_subset(&fs)? {
        return Ok(Some("E <= F implies E* <= F*"));
    }
    if !e.is_subset(&es)? {
        return Ok(Some("E <= E*"));
    }
    if st(&es)? != es {
        return Ok(Some("E** = E*"));
    }

    let prod = st(&e.mul(f)?)?;
    if prod != st(&es.mul(f)?)? || prod != st(&e.mul(&fs)?)? || prod != st(&es.mul(&fs)?)? {
        return Ok(Some("(EF)* = (E*F)* = (EF*)* = (E*F*)*"));
    }
    if sums != st(&es.sum(f)?)? || sums != st(&e.sum(&fs)?)? || sums != st(&es.sum(&fs)?)? {
        return Ok(Some("(E+F)* = (E*+F)* = (E+F*)* = (E*+F*)*"));
    }
    match e.colon(f) {
        Ok(c) => {
            let left = st(&c)?;
            let a = es.colon(&fs)?;
            let b = es.colon(f)?;
            if !left.is_subset(&a)? || a != b || st(&b)? != b {
                return Ok(Some("(E:F)* <= (E*:F*) = (E*:F) = (E*:F)*"));
            }
        }
        Err(Error::EmptyColon) => {}
        Err(other) => return Err(other),
    }
    let inter = e.intersect(f)?;
    let both = es.intersect(&fs)?;
    if !st(&inter)?.is_subset(&both)? || st(&both)? != both {
        return Ok(Some("(E&F)* <= E* & F* = (E* & F*)*"));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::catalog::{instances, operations};
    use crate::classify::sample::{SampleSpec, Sampler};

    #[test]
    fn laws_on_catalog() {
        for inst in instances() {
            for op in operations(&inst.domain) {
                let mut s = Sampler::new(&inst.domain, &SampleSpec::default().with_seed(3));
                for _ in 0..25 {
                    let (e, f, x) = (s.module(), s.module(), s.monomial());
                    let r = check_laws(&op, &e, &f, &x);
                    assert_eq!(r, Ok(None), "{} {op} E={e} F={f}", inst.name);
                }
            }
        }
    }
}
