pub mod cli;
pub mod constructive;
pub mod error;
pub mod model;
pub mod montecarlo;
pub mod mse;
pub mod reproduce;
pub mod scalar;
pub mod stability;
pub mod table;
pub mod weights;
