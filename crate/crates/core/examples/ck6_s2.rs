//! The F[∂]-spans of the CK_{6,q} and S_{2,q} generators are closed under the lambda-bracket.

use superalg::conformal::ck::{ck6_alpha, f_partial_rank, s2_beta};
use superalg::conformal::{ck6_generators, hodge_involution_failures, s2_generators, span_closure_check, ConformalContext};

fn main() -> superalg::Result<()> {
    for form in ["diag:1,1,1,1,1,-1", "diag:1,1,1,1,1,1"] {
        let ctx = ConformalContext::new(form.parse()?)?;
        let alpha = ck6_alpha(&ctx)?.root;
        let gens = ck6_generators(&ctx, &alpha)?;
        let r = span_closure_check(&ctx, &gens)?;
        println!(
            "CK6 for {form}: alpha = {alpha}, {} generators, rank {}, {} pairs, {}",
            gens.len(),
            f_partial_rank(&gens),
            r.pairs_checked,
            if r.passed() { "closed" } else { "NOT closed" }
        );
        println!("  star squares to {}, involution failures: {}", ctx.hodge_square(), hodge_involution_failures(&ctx).len());
    }
    for form in ["diag:1,1,1,1", "diag:2,1,1,1"] {
        let ctx = ConformalContext::new(form.parse()?)?;
        let beta = s2_beta(&ctx)?.root;
        let gens = s2_generators(&ctx, &beta)?;
        let r = span_closure_check(&ctx, &gens)?;
        println!(
            "S2 for {form}: beta = {beta}, {} generators, rank {}, {}",
            gens.len(),
            f_partial_rank(&gens),
            if r.passed() { "closed" } else { "NOT closed" }
        );
    }
    Ok(())
}
