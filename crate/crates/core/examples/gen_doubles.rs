//! Regenerates `data/e6_double.json` and `data/e8_double.json`.

use ade_fusion::double::exceptional::generate_exceptional_doubles;
use ade_fusion::graph::Diagram;

fn main() -> ade_fusion::Result<()> {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for d in [Diagram::E(6), Diagram::E(8)] {
        let all = generate_exceptional_doubles(d)?;
        let (double, found) = (&all[0], all.len());
        let path = dir.join(format!("{}_double.json", d.to_string().to_lowercase()));
        std::fs::write(&path, double.to_json()).map_err(|e| ade_fusion::Error::Io { path: path.clone(), source: e })?;
        println!("{d}: rank {}, {found} solution(s), wrote {}", double.rank(), path.display());
    }
    Ok(())
}
