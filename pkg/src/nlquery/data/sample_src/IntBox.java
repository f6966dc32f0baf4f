package com.sample.util;

public class IntBox<I extends Integer> {
    I value;

    public IntBox() {
        value = null;
    }

    public void put(I value) {
        this.value = value;
    }

    public I get() {
        return value;
    }

    public void fill(Integer seed) {
        value = null;
    }

    public Integer top() {
        return null;
    }
}
