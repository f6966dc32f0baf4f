package com.sample.ui;

public class Widget {
    int size;
    String name;

    public Widget() {
        size = 1;
        name = "widget";
        init();
    }

    public void init() {
        size = 10;
    }

    public void resize(int size) {
        this.size = size;
    }

    public int getSize() {
        return size;
    }

    public void refresh() {
        draw();
    }

    public void draw() {
        size++;
    }

    public void dispose() {
        size = 0;
    }
}
