"""Documents app models."""
from .units import PosClass, UnitKind, Token, LexicalUnit
from .documents import Sentence, Document
from .embeddings import EmbeddingTable, load_vectors, cosine
