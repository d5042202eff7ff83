"""Sinc-cosh-Gaussian interpolation kernels, polyphase image resizing and kernel analysis."""

from .analysis import (
    DcErrorCurve,
    FitResult,
    dc_response,
    dc_response_spectral,
    fit_parameters,
    psnr,
    response_distance,
)
from .filterbank import FilterBank, PhaseFilter, build_filter_bank, phase_coefficients
from .imageio import load_image, read_pnm, save_image, write_pnm
from .kernels import (
    BlackmanHarrisSinc,
    Box,
    CubicBSpline,
    Lanczos,
    MitchellNetravali,
    Nearest,
    ParameterError,
    SincCoshGaussian,
    SupportInfo,
    Tent,
    eval_kernel,
    format_kernel,
    parse_kernel,
    support,
)
from .resample import Image, ResizeOptions, resample_1d, resize_image
from .spectral import ResponseGrid, numeric_transform, p_s, response_grid, said_transform

__version__ = "0.1.0"
