"""
⚙️ CURV2K CONTROL PANEL - All the knobs that control tolerances, the eigensolver and the oracle

WHAT IS THIS FILE?
This is the single place where numeric thresholds live:
- How close an identity has to be before it counts as verified
- When a tensor counts as Einstein, symmetric or Bianchi
- How long the Jacobi eigensolver may sweep
- How many samples the brute-force oracle draws and how it refines them

HOW IT WORKS:
1. Values come from environment variables prefixed with CURV2K_ (or a .env file)
2. Pydantic validates types and provides defaults
3. Other files import 'settings' and read the values they need
4. Every operation that takes a tolerance also accepts an explicit override

REAL EXAMPLE:
In the shell: CURV2K_SEED=7 curv2k extremum --n 4
In oracle.py: seed = settings.SEED when no --seed flag is given
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    🎛️ CURV2K CONFIGURATION CLASS - Type-safe numeric settings with environment overrides

    THE SETTINGS CATEGORIES:
    🎲 SEEDS - Default seed for the sampling oracle
    📏 TOLERANCES - Identity, membership and Einstein thresholds
    🔄 EIGENSOLVER - Jacobi convergence and sweep limits
    🔍 ORACLE - Sampling budget, chunking and local refinement
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="CURV2K_",
        extra="ignore",
    )

    # 🎲 SEEDS
    SEED: int = 0                               # Oracle seed when --seed is absent

    # 📏 TOLERANCES
    FLOAT_TOLERANCE: float = 1e-10              # Generic relative float comparisons
    IDENTITY_TOLERANCE: float = 1e-9            # Pass threshold for identity reports
    MEMBERSHIP_TOLERANCE: float = 1e-9          # Symmetry/Bianchi residual after dividing by ||R||inf
    EINSTEIN_TOLERANCE: float = 1e-9            # ||Ric0|| / ||Ric|| below this means Einstein
    FLAT_TOLERANCE: float = 1e-12               # |mean| / ||M||_F below this means flat-like
    CLASSIFY_TOLERANCE: float = 1e-8            # l-inf distance for equality-case matching

    # 🔄 EIGENSOLVER
    JACOBI_TOLERANCE: float = 1e-14             # Off-diagonal Frobenius mass / ||M||_F
    JACOBI_MAX_SWEEPS: int = 64
    RECONSTRUCTION_TOLERANCE: float = 1e-9      # ||Q L Q^T - M||inf / ||M||inf
    DEGENERACY_GAP: float = 1e-7                # Eigenvalue gaps below this flag degeneracy

    # 🔍 ORACLE
    ORACLE_BUDGET: int = 100_000                # Simplex samples per run
    ORACLE_CHUNK_SIZE: int = 4096               # Samples drawn per sub-seeded chunk
    ORACLE_WORKERS: int = 1                     # Threads evaluating chunks
    ORACLE_REFINE_STARTS: int = 10              # Best samples handed to local refinement
    ORACLE_REFINE_ITERATIONS: int = 500
    ORACLE_STEP_FLOOR: float = 1e-12
    ORACLE_TOLERANCE: float = 1e-9              # f below -tol is a counterexample
    ARGMIN_TOLERANCE: float = 1e-3              # l-inf distance when classifying the oracle argmin

    # 🧪 MODEL SPACES
    DEFAULT_WEYL_AMPLITUDE: float = 1.0         # |W| / |R_const| for random Einstein tensors

    LOG_LEVEL: str = "WARNING"


settings = Settings()
