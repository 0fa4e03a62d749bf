//! Parameter table of the distance-3 code families for small alphabets.

use nbstab::symplectic_code::{family_params, CodeFamily};

fn main() {
    for fam in CodeFamily::ALL {
        println!("family {}: {}", fam.id(), fam.formula());
        let rs: &[u32] = match fam {
            CodeFamily::QuadraticPlusOne => &[0],
            _ => &[2, 3, 4, 5],
        };
        for q in [2u64, 3, 4, 5, 7, 8, 9] {
            let cells: Vec<String> = rs
                .iter()
                .filter_map(|&r| family_params(q, fam, r).ok().map(|p| p.to_string()))
                .collect();
            println!("  q={q:<2} {}", cells.join("  "));
        }
    }
}
