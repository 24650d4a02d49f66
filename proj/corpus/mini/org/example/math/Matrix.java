package org.example.math;

public final class Matrix {
    private final int rows;
    private final int cols;
    private final double[][] cells;

    public Matrix(int rows, int cols) {
        if (rows <= 0 || cols <= 0) {
            throw new IllegalArgumentException("dimensions must be positive");
        }
        this.rows = rows;
        this.cols = cols;
        this.cells = new double[rows][cols];
    }

    public static Matrix identity(int n) {
        Matrix m = new Matrix(n, n);
        for (int i = 0; i < n; i++) {
            m.cells[i][i] = 1.0;
        }
        return m;
    }

    public static Matrix of(double[][] values) {
        Matrix m = new Matrix(values.length, values[0].length);
        for (int i = 0; i < values.length; i++) {
            for (int j = 0; j < values[i].length; j++) {
                m.cells[i][j] = values[i][j];
            }
        }
        return m;
    }

    public double get(int r, int c) {
        return cells[r][c];
    }

    public void set(int r, int c, double value) {
        cells[r][c] = value;
    }

    public Matrix multiply(Matrix other) {
        if (cols != other.rows) {
            throw new IllegalArgumentException("shape mismatch");
        }
        Matrix out = new Matrix(rows, other.cols);
        for (int i = 0; i < rows; i++) {
            for (int k = 0; k < cols; k++) {
                double a = cells[i][k];
                if (a == 0.0) {
                    continue;
                }
                for (int j = 0; j < other.cols; j++) {
                    out.cells[i][j] += a * other.cells[k][j];
                }
            }
        }
        return out;
    }

    public Matrix add(Matrix other) {
        Matrix out = new Matrix(rows, cols);
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                out.cells[i][j] = cells[i][j] + other.cells[i][j];
            }
        }
        return out;
    }

    public Matrix transpose() {
        Matrix out = new Matrix(cols, rows);
        for (int i = 0; i < rows; i++) {
            for (int j = 0; j < cols; j++) {
                out.cells[j][i] = cells[i][j];
            }
        }
        return out;
    }

    public double trace() {
        double sum = 0;
        for (int i = 0; i < Math.min(rows, cols); i++) {
            sum += cells[i][i];
        }
        return sum;
    }

    public double determinant() {
        if (rows != cols) {
            throw new IllegalStateException("not square");
        }
        double[][] a = new double[rows][];
        for (int i = 0; i < rows; i++) {
            a[i] = cells[i].clone();
        }
        double det = 1.0;
        for (int col = 0; col < rows; col++) {
            int pivot = col;
            for (int r = col + 1; r < rows; r++) {
                if (Math.abs(a[r][col]) > Math.abs(a[pivot][col])) {
                    pivot = r;
                }
            }
            if (Math.abs(a[pivot][col]) < 1e-12) {
                return 0.0;
            }
            if (pivot != col) {
                double[] tmp = a[pivot];
                a[pivot] = a[col];
                a[col] = tmp;
                det = -det;
            }
            det *= a[col][col];
            for (int r = col + 1; r < rows; r++) {
                double factor = a[r][col] / a[col][col];
                for (int c = col; c < rows; c++) {
                    a[r][c] -= factor * a[col][c];
                }
            }
        }
        return det;
    }

    public boolean isSymmetric() {
        if (rows != cols) {
            return false;
        }
        for (int i = 0; i < rows; i++) {
            for (int j = i + 1; j < cols; j++) {
                if (cells[i][j] != cells[j][i]) {
                    return false;
                }
            }
        }
        return true;
    }

    @Override
    public String toString() {
        StringBuilder sb = new StringBuilder();
        for (double[] row : cells) {
            for (int j = 0; j < row.length; j++) {
                if (j > 0) {
                    sb.append('\t');
                }
                sb.append(String.format("%.3f", row[j]));
            }
            sb.append('\n');
        }
        return sb.toString();
    }
}
