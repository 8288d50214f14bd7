use super::poly::Poly;
use crate::numfield::Scalar;

/// Monic gcd via the subresultant polynomial remainder sequence.
///
/// The PRS divisions `g·h^δ` are exact, which keeps intermediate
/// coefficients from growing the way plain pseudo-remainders do.
pub fn poly_gcd<T: Scalar>(a: &Poly<T>, b: &Poly<T>) -> Poly<T> {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let (mut a, mut b) = if a.degree() >= b.degree() { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    let mut g = T::one();
    let mut h = T::one();
    loop {
        let delta = (a.degree().unwrap() - b.degree().unwrap()) as i32;
        let r = a.pseudo_rem(&b);
        match r.degree() {
            None => return b.monic(),
            Some(0) => return Poly::one(a.var()),
            Some(_) => {}
        }
        let divisor = g.clone() * h.powi(delta);
        a = b;
        b = r.scale(&(T::one() / divisor));
        g = a.lc().unwrap().clone();
        h = g.powi(delta) * h.powi(1 - delta);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::GaussianRational as G;
    use crate::polycore::Var;

    fn p(cs: &[i64]) -> Poly<G> {
        Poly::new(Var::X, cs.iter().map(|&c| G::from(c)).collect())
    }

    #[test]
    fn gcd_of_products() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[-3, 1]);
        assert_eq!(poly_gcd(&a, &b), p(&[-1, 1]));
    }

    #[test]
    fn coprime_gives_one() {
        assert_eq!(poly_gcd(&p(&[1, 0, 1]), &p(&[-1, 1])), p(&[1]));
    }

    #[test]
    fn higher_degree_common_factor() {
        let f = &p(&[1, 1, 1]) * &p(&[-2, 0, 1]);
        let a = &f * &p(&[5, -3, 0, 2]);
        let b = &f * &p(&[7, 1]);
        assert_eq!(poly_gcd(&a, &b), f.monic());
    }

    #[test]
    fn gaussian_factor() {
        // (x - i)^2 (x + 1) and (x - i)(x - 2)
        let xi = Poly::new(Var::X, vec![-G::i(), G::from(1)]);
        let a = &(&xi * &xi) * &p(&[1, 1]);
        let b = &xi * &p(&[-2, 1]);
        assert_eq!(poly_gcd(&a, &b), xi);
    }
}
