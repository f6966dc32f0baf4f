package com.sample.shapes;

public class Shape {
    int area;

    public void draw() {
        area = area + 1;
    }

    public int getArea() {
        return area;
    }

    public void dispose() {
        area = 0;
    }

    public static <E extends Shape> void render(E shape) {
        shape.draw();
    }
}
