package com.sample.shapes;

public class Circle extends Shape {
    int radius;

    public Circle(int radius) {
        this.radius = radius;
    }

    public void draw() {
        super.draw();
        radius = radius + 1;
    }

    public int getArea() {
        return radius * radius;
    }

    public Shape bigger() {
        Shape next = new Circle(radius);
        return next;
    }
}
