"""Mutual-information decomposition of linear vs nonlinear dependence.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.
"""

from lindep._core import (  # noqa: F401
    EXPONENTIAL_NOISE_SCALE,
    MILLER_MADOW_DIVISOR,
    BdsResult,
    DiscretizedSeries,
    EntropyEstimate,
    JointHistogram,
    LambdaReport,
    LindepError,
    PairedSample,
    RegressionFit,
    __version__,
    bds_statistic,
    binary_correlation_function,
    binary_mi_approx,
    binary_markov_gamma,
    compute_lambda,
    correlation_integral,
    covariance,
    default_bin_count,
    equal_frequency_bins,
    fit_polynomial,
    gaussian_mi,
    gen_anscombe_like,
    gen_binary_markov,
    gen_bivariate_normal,
    gen_exponential,
    gen_polynomial,
    inverse_normal_cdf,
    joint_histogram,
    lambda_profile,
    mean,
    midranks,
    miller_madow,
    mutual_information,
    mutual_information_binned,
    pearson,
    plugin_entropy,
    quantile_transform,
    residuals_sorted_by_x,
    sample_variance,
    spearman,
)
