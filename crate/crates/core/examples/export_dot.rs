//! Writes a product and a colored certificate overlay as DOT, and the
//! certificate as JSON. Render with `dot -Tsvg`.
//!
//! `cargo run --example export_dot -- /tmp/out`

use std::path::PathBuf;

use arcconn::io::{certificate_to_dot, to_dot, CertificateJson, ProductShape};
use arcconn::{prop_certificates, ClassPair, SeedPair};

fn main() -> arcconn::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| ".".into()));
    std::fs::create_dir_all(&dir)?;

    let class = ClassPair::CycleBicycle;
    let p = class.product(4, 4)?;
    let s = SeedPair::new(p.encode(0, 0), p.encode(1, 1))?;
    let r = prop_certificates(class, 4, 4, s)?;
    let shape = Some(ProductShape::of(&p));

    std::fs::write(dir.join("product.dot"), to_dot(p.digraph(), shape))?;
    std::fs::write(
        dir.join("certificate.dot"),
        certificate_to_dot(Some(p.digraph()), p.digraph().order(), &r.family, shape),
    )?;
    let json = CertificateJson::new(p.digraph(), &r.family, shape).to_string_pretty()?;
    std::fs::write(dir.join("certificate.json"), json)?;
    println!(
        "wrote product.dot, certificate.dot ({} members) and certificate.json to {}",
        r.family.len(),
        dir.display()
    );
    Ok(())
}
