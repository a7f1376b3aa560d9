//! Build a and b with a * x = (2b - 1)(3b - 1) for a few x.
use bnsets::crt::{lemma_pair, verify_certificate};
use num_bigint::BigInt;

fn main() -> bnsets::Result<()> {
    let product: BigInt = BigInt::from(132) * 133 * 143 * 144;
    for x in [BigInt::from(5), BigInt::from(-12), BigInt::from(1) << 70u32, product] {
        let c = lemma_pair(&x)?;
        println!("{c}");
        assert!(verify_certificate(&c));
    }
    Ok(())
}
