###
### Union Find Data Structure
###

class UnionFind:
    def __init__(self):
        self.forest = {}

    def add(self, k):
        if k not in self.forest:
            self.forest[k] = k
        return k

    def union(self, a, b):
        root_a = self.find(a)
        root_b = self.find(b)
        self.forest[root_b] = root_a
        return root_a

    def find(self, k):
        if k not in self.forest:
            self.forest[k] = k

        # Find the root.
        root = k
        while root != self.forest[root]:
            root = self.forest[root]

        # Path compression.
        node = k
        while node != self.forest[node]:
            self.forest[node] = root
            node = self.forest[node]

        return root
