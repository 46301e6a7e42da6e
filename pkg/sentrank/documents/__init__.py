"""Documents app turns raw text into indexed sentences of essential units and serves embeddings."""
