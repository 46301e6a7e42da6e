from .pipelines import PipelineConfigSerializer, AblationField
from .rankings import RankingSerializer
