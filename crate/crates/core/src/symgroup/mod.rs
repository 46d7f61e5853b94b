//! Partitions, permutations, set partitions, characters and the Jucys–Murphy identity.

pub mod character;
pub mod partition;
pub mod permutation;
pub mod setpart;
pub mod yjm;

pub use character::character;
pub use partition::{partitions_of, Partition};
pub use permutation::{conjugacy_class, is_transitive, Permutation, UnionFind};
pub use setpart::{set_partitions, SetPartition};
pub use yjm::{class_sum, class_sum_expansion, jucys_murphy, yjm_product_expansion, GroupAlgebraElement};
