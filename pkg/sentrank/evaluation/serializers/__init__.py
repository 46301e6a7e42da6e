from .corpus import EvalDocumentSerializer
from .reports import RougeResultSerializer, VariantReportSerializer
