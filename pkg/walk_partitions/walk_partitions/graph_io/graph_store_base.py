from abc import ABC, abstractmethod

from walk_partitions.walk_partitions.graph_io.graph_schema import GraphSchema


class GraphStoreBase(ABC):
    """
    GraphStoreBase abstract class.
    """

    @abstractmethod
    def save_graph(self, path: str, schema: GraphSchema) -> None:
        ...

    @abstractmethod
    def read_graph(self, path: str) -> GraphSchema:
        ...
