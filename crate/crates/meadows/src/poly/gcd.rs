//! Multivariate gcd by recursive content/primitive-part reduction with a
//! subresultant polynomial remainder sequence in the main variable.
//!
//! The polynomial is viewed as univariate in its smallest variable with
//! coefficients in the polynomial ring over the remaining variables;
//! contents recurse on strictly fewer variables. Results are returned in
//! primitive-positive normal form, so nonzero constants are units and
//! "equal up to a nonzero rational" becomes plain equality.

use super::MultiPoly;

pub(super) fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return normalize_or_zero(b);
    }
    if b.is_zero() {
        return normalize_or_zero(a);
    }
    if a.is_constant() || b.is_constant() {
        return MultiPoly::one();
    }
    let var = a
        .vars()
        .into_iter()
        .chain(b.vars())
        .min()
        .expect("non-constant polynomials have variables");
    if a.degree_in(&var) == 0 {
        return gcd(a, &content_in(b, &var));
    }
    if b.degree_in(&var) == 0 {
        return gcd(&content_in(a, &var), b);
    }
    let ca = content_in(a, &var);
    let cb = content_in(b, &var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let cont = gcd(&ca, &cb);
    let pp = subresultant_gcd(pa, pb, &var);
    cont.mul(&pp)
        .primitive_positive()
        .expect("gcd of nonzero polynomials is nonzero")
}

fn normalize_or_zero(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        MultiPoly::zero()
    } else {
        p.primitive_positive().expect("nonzero")
    }
}

/// Gcd of the primitive parts of two polynomials, both with positive
/// degree in `var`, via the subresultant remainder sequence.
fn subresultant_gcd(a: MultiPoly, b: MultiPoly, var: &str) -> MultiPoly {
    let (mut a, mut b) = if a.degree_in(var) >= b.degree_in(var) {
        (a, b)
    } else {
        (b, a)
    };
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let delta = a.degree_in(var) - b.degree_in(var);
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return primitive_part(&b, var);
        }
        if r.degree_in(var) == 0 {
            // A nonzero remainder free of the main variable: the
            // primitive parts are coprime in it.
            return MultiPoly::one();
        }
        let divisor = g.mul(&h.pow(delta));
        let next = r
            .div_exact(&divisor)
            .expect("subresultant remainders divide exactly");
        a = b;
        b = next;
        g = leading_coeff_in(&a, var);
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g
                .pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h-sequence divides exactly"),
        };
    }
}

/// Pseudo-remainder: the `R` with `lc(b)^(deg a - deg b + 1) * a = q*b + R`
/// and `deg R < deg b`, all degrees in `var`.
fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: &str) -> MultiPoly {
    let da = a.degree_in(var) as usize;
    let db = b.degree_in(var) as usize;
    debug_assert!(da >= db && db >= 1);
    let bu = to_univar(b, var);
    let lb = bu[db].clone();
    let mut r = to_univar(a, var);
    let mut spare = (da - db + 1) as u32;
    loop {
        let d = match univar_degree(&r) {
            Some(d) if d >= db => d,
            _ => break,
        };
        let lr = r[d].clone();
        for c in r.iter_mut() {
            *c = c.mul(&lb);
        }
        for (i, bc) in bu.iter().enumerate() {
            r[d - db + i] = r[d - db + i].sub(&lr.mul(bc));
        }
        debug_assert!(r[d].is_zero());
        trim(&mut r);
        spare -= 1;
    }
    if spare > 0 {
        let scale = lb.pow(spare);
        for c in r.iter_mut() {
            *c = c.mul(&scale);
        }
    }
    from_univar(&r, var)
}

/// The gcd of the coefficients of `p` viewed as univariate in `var`.
fn content_in(p: &MultiPoly, var: &str) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for c in to_univar(p, var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd(&acc, &c);
        if acc == MultiPoly::one() {
            break;
        }
    }
    acc
}

fn primitive_part(p: &MultiPoly, var: &str) -> MultiPoly {
    p.div_exact(&content_in(p, var)).expect("content divides")
}

fn to_univar(p: &MultiPoly, var: &str) -> Vec<MultiPoly> {
    let deg = p.degree_in(var) as usize;
    let mut coeffs = vec![MultiPoly::zero(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exponent(var) as usize;
        let rest = MultiPoly::monomial(m.without(var), c.clone());
        coeffs[e] = coeffs[e].add(&rest);
    }
    let mut coeffs = coeffs;
    trim(&mut coeffs);
    coeffs
}

fn from_univar(coeffs: &[MultiPoly], var: &str) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    let v = MultiPoly::var(var);
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&c.mul(&v.pow(e as u32)));
        }
    }
    acc
}

fn univar_degree(coeffs: &[MultiPoly]) -> Option<usize> {
    coeffs.len().checked_sub(1)
}

fn trim(coeffs: &mut Vec<MultiPoly>) {
    while coeffs.last().is_some_and(MultiPoly::is_zero) {
        coeffs.pop();
    }
}

fn leading_coeff_in(p: &MultiPoly, var: &str) -> MultiPoly {
    to_univar(p, var).pop().expect("nonzero polynomial")
}

#[cfg(test)]
mod tests {
    use super::super::tests::random_poly;
    use super::super::MultiPoly;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn x() -> MultiPoly {
        MultiPoly::var("x")
    }

    fn y() -> MultiPoly {
        MultiPoly::var("y")
    }

    fn z() -> MultiPoly {
        MultiPoly::var("z")
    }

    fn int(n: i64) -> MultiPoly {
        MultiPoly::from_int(n)
    }

    #[test]
    fn gcd_examples() {
        // gcd(x^2 - 1, x^2 - 2x + 1) = x - 1, verified by exact division
        let a = x().mul(&x()).sub(&int(1));
        let b = x().mul(&x()).sub(&int(2).mul(&x())).add(&int(1));
        let g = a.gcd(&b);
        assert_eq!(g, x().sub(&int(1)));
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());

        assert_eq!(x().mul(&y()).gcd(&x().mul(&z())), x());
        assert_eq!(int(6).gcd(&int(4)), MultiPoly::one());
    }

    #[test]
    fn gcd_with_zero_normalizes() {
        let p = int(-2).mul(&x()).add(&int(4));
        assert_eq!(MultiPoly::zero().gcd(&p), x().sub(&int(2)));
        assert_eq!(p.gcd(&MultiPoly::zero()), x().sub(&int(2)));
        assert_eq!(MultiPoly::zero().gcd(&MultiPoly::zero()), MultiPoly::zero());
    }

    #[test]
    fn gcd_divides_and_respects_products() {
        let mut rng = StdRng::seed_from_u64(23);
        let vars = ["x", "y"];
        for _ in 0..60 {
            let a = random_poly(&mut rng, &vars, 3);
            let b = random_poly(&mut rng, &vars, 3);
            let c = random_poly(&mut rng, &vars, 2);
            if a.is_zero() || b.is_zero() || c.is_zero() {
                continue;
            }
            let (ac, bc) = (a.mul(&c), b.mul(&c));
            let g = ac.gcd(&bc);
            // gcd divides both arguments exactly
            assert!(ac.div_exact(&g).is_some(), "gcd must divide {ac}");
            assert!(bc.div_exact(&g).is_some(), "gcd must divide {bc}");
            // the planted common factor is captured up to a unit
            assert!(g.div_exact(&c.primitive_positive().unwrap()).is_some());
            // and ac*bc = gcd * lcm
            let prod = ac.mul(&bc);
            let lcm = prod.div_exact(&g).expect("gcd divides the product");
            assert_eq!(g.mul(&lcm), prod);
        }
    }

    #[test]
    fn radical_examples() {
        // (x - 1)^2 (x + 2) has squarefree part (x - 1)(x + 2)
        let sq = x().sub(&int(1)).pow(2).mul(&x().add(&int(2)));
        let expected = x().mul(&x()).add(&x()).sub(&int(2));
        assert_eq!(sq.radical().unwrap(), expected);

        assert_eq!(int(5).radical().unwrap(), MultiPoly::one());
        assert_eq!(
            x().mul(&y().pow(2)).radical().unwrap(),
            x().mul(&y())
        );
        assert!(MultiPoly::zero().radical().is_err());
    }

    #[test]
    fn radical_is_squarefree_and_power_stable() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..40 {
            let p = random_poly(&mut rng, &["x", "y"], 3);
            if p.is_zero() || p.is_constant() {
                continue;
            }
            let rad = p.radical().unwrap();
            // squarefree: gcd with every partial derivative is constant
            let mut g = rad.clone();
            for v in rad.vars() {
                g = g.gcd(&rad.derivative(&v));
            }
            assert!(g.is_constant(), "radical of {p} is not squarefree");
            // radical(p^k) = radical(p)
            for k in 1..=3u32 {
                assert_eq!(p.pow(k).radical().unwrap(), rad);
            }
        }
    }
}
