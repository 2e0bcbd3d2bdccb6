"""Local spectra of vertex sets and completely pseudo-regular codes."""
from .codes import CodeReport, Verdict, analyze
from .config import Config
from .eigen import Spectrum, apply_polynomial, project, spectral_decomposition
from .graph import (DistancePartition, Graph, VertexSet, distance_partition, generate,
                    hamming74_code, load_graph, vertex_set)
from .local import LocalSpectrum, is_extremal, local_idempotent_polynomial, local_spectrum, rho_vector
from .polynomials import (Polynomial, PredistanceSystem, hoffman_polynomial,
                          interpolate_on_local_spectrum, local_inner_product,
                          predistance_polynomials)

__version__ = "0.1.0"
