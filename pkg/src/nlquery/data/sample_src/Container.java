package com.sample.util;

public class Container<T extends Widget> {
    T item;
    int capacity;

    public Container(int capacity) {
        this.capacity = capacity;
    }

    public void put(T value) {
        item = value;
    }

    public T get() {
        return item;
    }

    public boolean isFull() {
        return capacity == 0;
    }
}
