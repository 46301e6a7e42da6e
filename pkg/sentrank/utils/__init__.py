"""Utils is a module that help solving common troubles on sentrank."""
