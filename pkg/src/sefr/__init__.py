"""Linear-time, constant-memory classification with byte-friendly export.

The public surface is intentionally small:

* core: train_binary / train_multiclass / decision_score / predictions
* SEFRClassifier / MinMaxNormalizer: estimator-style wrappers
* preprocess: min-max scaling, 8-bit quantization, binary container
* evaluate: confusion metrics, stratified CV, baselines
* data: CSV loading, synthetic blobs, model documents, checksums
* bench: timing/MAC sweeps
* viz / export: weight images, embedded C data + golden fixtures
"""
from .classifier import SEFRClassifier
from .core import (
    DEFAULT_EPSILON,
    BinaryModel,
    ClassMeans,
    MulticlassModel,
    ScoreStats,
    class_means,
    decision_score,
    decision_scores,
    predict_batch,
    predict_binary,
    predict_multiclass,
    score_stats,
    train_binary,
    train_multiclass,
)
from .data import DatasetSpec, ModelBundle, gen_blobs, load_csv, load_model, save_model
from .evaluate import (
    EvalReport,
    NearestCentroidBaseline,
    accuracy,
    confusion,
    cross_validate,
    macro_f1,
    majority_baseline,
    stratified_kfold,
)
from .exceptions import SefrError
from .instrument import MacCounter, mac_counter
from .preprocess import (
    MinMaxNormalizer,
    NormalizationParams,
    QuantizedMatrix,
    apply_minmax,
    dequantize,
    fit_minmax,
    quantize_u8,
    read_quantized,
    write_quantized,
)

__version__ = "1.0.0"

__all__ = [
    "SEFRClassifier",
    "DEFAULT_EPSILON",
    "BinaryModel",
    "ClassMeans",
    "MulticlassModel",
    "ScoreStats",
    "class_means",
    "decision_score",
    "decision_scores",
    "predict_batch",
    "predict_binary",
    "predict_multiclass",
    "score_stats",
    "train_binary",
    "train_multiclass",
    "DatasetSpec",
    "ModelBundle",
    "gen_blobs",
    "load_csv",
    "load_model",
    "save_model",
    "EvalReport",
    "NearestCentroidBaseline",
    "accuracy",
    "confusion",
    "cross_validate",
    "macro_f1",
    "majority_baseline",
    "stratified_kfold",
    "SefrError",
    "MacCounter",
    "mac_counter",
    "MinMaxNormalizer",
    "NormalizationParams",
    "QuantizedMatrix",
    "apply_minmax",
    "dequantize",
    "fit_minmax",
    "quantize_u8",
    "read_quantized",
    "write_quantized",
    "__version__",
]
