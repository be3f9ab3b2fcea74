//! Braid groups of the disc, sphere and projective plane, their mapping class
//! groups, and the machinery to compute with them: free words, coset
//! enumeration, Smith normal form, Reidemeister–Schreier rewriting, Garside
//! normal form and small finite groups.

pub mod abelian;
pub mod coset;
pub mod error;
pub mod finite;
pub mod garside;
pub mod perm;
pub mod presentation;
pub mod schreier;
pub mod word;

pub use abelian::{
    abelian_invariants, abelianized_image, min_gens_lower_bound, relation_matrix, smith_normal_form,
    AbelianImage, AbelianInvariants, Abelianization, IntMatrix, SmithForm,
};
pub use coset::{enumerate, group_order, subgroup_index, CosetTable, EnumLimits, EnumOutcome, Strategy};
pub use error::{Error, Result};
pub use finite::{concretize, concretize_presentation, identify, FiniteGroupTable, GroupLabel};
pub use garside::{equal_in_braid_group, normal_form, NormalFormBraid, PermutationBraid};
pub use perm::{evaluate_perm, Permutation};
pub use presentation::{
    artin, family_presentation, named_word, projective_plane, sphere, Family, Named, Presentation, Surface,
};
pub use schreier::{schreier_transversal, subgroup_presentation, SchreierTransversal, SubgroupPresentation};
pub use word::{Alphabet, Letter, Word};
