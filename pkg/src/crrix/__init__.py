"""Regulatory risk index construction from partially labeled news corpora.

Pipeline: load articles -> bag of words -> LDA topic model (collapsed
Gibbs) -> coherence-driven topic-count selection -> Hellinger-distance
classification of unlabeled articles -> coverage-ratio index -> market
correlation and causality analysis.
"""

from .baselines import NbModel, SvmModel, nb_predict, nb_train, svm_predict, svm_train
from .coherence import (
    CoherenceConfig,
    CoherenceResult,
    CooccurrenceStats,
    Measure,
    coherence_cv,
    coherence_uci,
    coherence_umass,
    select_k,
)
from .corpus import (
    Article,
    BowCorpus,
    CorpusSchema,
    Label,
    Vocabulary,
    default_stopwords,
    load_corpus,
    load_stopwords,
    preprocess,
)
from .errors import CrrixError, DataError, NumericalError, UsageError
from .index import (
    AlignedSeries,
    FillPolicy,
    IndexPoint,
    IndexSeries,
    Periodicity,
    align_series,
    build_index,
    load_market_csv,
)
from .lda import LdaHyperparams, ThetaEstimate, TopicModel, infer_theta, log_likelihood, train
from .similarity import (
    ConfusionMatrix,
    DistanceProfile,
    Group,
    ThresholdRule,
    classify,
    confusion_matrix,
    distance_profiles,
    hellinger,
    hellinger_topic_distance,
    jaccard_topic_distance,
)
from .stats import (
    AdfResult,
    Density,
    GrangerResult,
    LagSelection,
    VariancePoint,
    adf_test,
    granger_sweep,
    granger_test,
    hellinger_variance_check,
    pearson,
)

__version__ = "0.1.0"
