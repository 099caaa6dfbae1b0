//! Arithmetic in Q(√d) and square-root adjunction.

use superalg::scalar::{adjoin_sqrt, rat, squarefree_part, ExactScalar, FieldDescriptor};

fn main() -> superalg::Result<()> {
    let f = FieldDescriptor::quadratic(2)?;
    let x = ExactScalar::new(rat(1, 1), rat(1, 2), f);
    let y = ExactScalar::new(rat(-3, 1), rat(2, 1), f);
    println!("field: {f}");
    println!("x = {x}, y = {y}");
    println!("x + y = {}", &x + &y);
    println!("x * y = {}", &x * &y);
    println!("1 / x = {}", x.inv().expect("x is nonzero"));
    println!("conj(x) = {}", x.conjugate());

    for d in [rat(-1, 5), rat(12, 7), rat(9, 4)] {
        let s = adjoin_sqrt(&d)?;
        println!("sqrt({d}) = {} in {} (squarefree part {})", s.root, s.field, squarefree_part(&d)?);
    }
    Ok(())
}
