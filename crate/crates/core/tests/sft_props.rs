mod common;

use cupcap::linalg::{induced_hom, IntMatrix};
use cupcap::sft::{
    cap_with_winding, cap_with_winding_induced, sft_homology, validate_adjacency, AdjacencyFile, SftError,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn winding_cap_agrees_with_lattice_map(seed: u64) {
        let a = common::random_adjacency(4, &mut ChaCha8Rng::seed_from_u64(seed));
        let h = sft_homology(&a).unwrap();
        let cap = cap_with_winding(&a).unwrap();
        let independent = induced_hom(&IntMatrix::identity(a.num_vertices()), &h.h1, &h.h0).unwrap();
        prop_assert_eq!(cap.matrix(), independent.matrix());
        prop_assert_eq!(&cap, &cap_with_winding_induced(&a).unwrap());
        // every kernel generator lands on its own class in the cokernel
        for (j, z) in h.h1.generators().columns().enumerate() {
            prop_assert_eq!(cap.matrix().column(j), h.h0.class_of(&z).unwrap());
        }
    }

    #[test]
    fn ranks_agree(seed: u64) {
        // Ker and Coker of a square matrix have equal rank
        let a = common::random_adjacency(4, &mut ChaCha8Rng::seed_from_u64(seed));
        let h = sft_homology(&a).unwrap();
        prop_assert_eq!(h.h0.free_rank(), h.h1.free_rank());
        prop_assert!(h.h1.torsion().is_empty());
    }
}

#[test]
fn bowen_franks_examples() {
    // golden mean shift: I - A^t is unimodular
    let golden = validate_adjacency(&IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]])).unwrap();
    let h = sft_homology(&golden).unwrap();
    assert!(h.h0.is_trivial() && h.h1.is_trivial());
    // full 3-shift: H_0 = Z/2
    let three = validate_adjacency(&IntMatrix::from_rows(&[vec![3]])).unwrap();
    assert_eq!(sft_homology(&three).unwrap().h0.to_string(), "Z/2");
}

#[test]
fn adjacency_file_validation() {
    let file: AdjacencyFile = serde_json::from_str(r#"{"vertices": ["u", "v"], "matrix": [[2, 1], [1, 2]]}"#).unwrap();
    assert!(file.load().is_ok());
    let bad: AdjacencyFile = serde_json::from_str(r#"{"matrix": [[0, 1], [1, 0]]}"#).unwrap();
    assert_eq!(bad.load().unwrap_err(), SftError::IsPermutation);
}
