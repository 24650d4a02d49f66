package org.example.util;

import java.util.ArrayDeque;
import java.util.ArrayList;
import java.util.Arrays;
import java.util.Deque;
import java.util.List;

public class Graph {
    private final int vertices;
    private final List<List<Integer>> adjacency;
    private int edges;

    public Graph(int vertices) {
        this.vertices = vertices;
        this.adjacency = new ArrayList<>(vertices);
        for (int v = 0; v < vertices; v++) {
            adjacency.add(new ArrayList<>());
        }
    }

    public void addEdge(int from, int to) {
        adjacency.get(from).add(to);
        edges++;
    }

    public int vertexCount() {
        return vertices;
    }

    public int edgeCount() {
        return edges;
    }

    public int[] bfsDistances(int source) {
        int[] dist = new int[vertices];
        Arrays.fill(dist, -1);
        Deque<Integer> queue = new ArrayDeque<>();
        dist[source] = 0;
        queue.add(source);
        while (!queue.isEmpty()) {
            int v = queue.poll();
            for (int w : adjacency.get(v)) {
                if (dist[w] >= 0) {
                    continue;
                }
                dist[w] = dist[v] + 1;
                queue.add(w);
            }
        }
        return dist;
    }

    public List<Integer> dfsOrder(int source) {
        boolean[] seen = new boolean[vertices];
        List<Integer> order = new ArrayList<>();
        Deque<Integer> stack = new ArrayDeque<>();
        stack.push(source);
        while (!stack.isEmpty()) {
            int v = stack.pop();
            if (seen[v]) {
                continue;
            }
            seen[v] = true;
            order.add(v);
            List<Integer> next = adjacency.get(v);
            for (int i = next.size() - 1; i >= 0; i--) {
                if (!seen[next.get(i)]) {
                    stack.push(next.get(i));
                }
            }
        }
        return order;
    }

    public boolean hasCycle() {
        int[] state = new int[vertices];
        for (int v = 0; v < vertices; v++) {
            if (state[v] == 0 && visit(v, state)) {
                return true;
            }
        }
        return false;
    }

    private boolean visit(int v, int[] state) {
        state[v] = 1;
        for (int w : adjacency.get(v)) {
            if (state[w] == 1) {
                return true;
            }
            if (state[w] == 0 && visit(w, state)) {
                return true;
            }
        }
        state[v] = 2;
        return false;
    }

    public List<Integer> topologicalOrder() {
        int[] indegree = new int[vertices];
        for (List<Integer> targets : adjacency) {
            for (int w : targets) {
                indegree[w]++;
            }
        }
        Deque<Integer> ready = new ArrayDeque<>();
        for (int v = 0; v < vertices; v++) {
            if (indegree[v] == 0) {
                ready.add(v);
            }
        }
        List<Integer> order = new ArrayList<>();
        while (!ready.isEmpty()) {
            int v = ready.poll();
            order.add(v);
            for (int w : adjacency.get(v)) {
                if (--indegree[w] == 0) {
                    ready.add(w);
                }
            }
        }
        if (order.size() != vertices) {
            throw new IllegalStateException("graph has a cycle");
        }
        return order;
    }

    public int findPath(int from, int to, int maxDepth) {
        int[] dist = bfsDistances(from);
        outer:
        for (int depth = 0; depth <= maxDepth; depth++) {
            for (int v = 0; v < vertices; v++) {
                if (dist[v] == depth && v == to) {
                    break outer;
                }
            }
        }
        return dist[to];
    }
}
