//! Laurent polynomials and rational functions in `q`, with no rounding anywhere.

use qbbw::exactring::{pretty, ratio, LaurentPoly, RatFunc};

fn main() -> qbbw::Result<()> {
    let q = LaurentPoly::q();
    let qi = LaurentPoly::q_pow(-1);

    // the quantum integer [2] = q + q^-1 and [2]^2 = q^2 + 2 + q^-2
    let two = &q + &qi;
    println!("[2]   = {}", pretty(&two));
    println!("[2]^2 = {}", pretty(&two.pow(2)));

    // (q^2 - q^-2)/(q - q^-1) simplifies to q + q^-1
    let f = RatFunc::new(LaurentPoly::q_minus_q_inv(2), LaurentPoly::q_minus_q_inv(1))?;
    println!("(q^2-q^-2)/(q-q^-1) = {f}");
    assert_eq!(f.as_laurent(), Some(&two));

    // 1/(1+q) is not a Laurent polynomial but lives in Q(q)
    let g = RatFunc::new(LaurentPoly::one(), &LaurentPoly::one() + &q)?;
    println!("1/(1+q) + q/(1+q) = {}", &g + &(&g * &RatFunc::from(q.clone())));
    println!("1/(1+q) at q = 1/2: {}", g.eval_at(&ratio(1, 2))?);

    // canonical text form round-trips
    let s = two.to_string();
    println!("canonical form: {s}");
    assert_eq!(s.parse::<LaurentPoly>()?, two);
    Ok(())
}
