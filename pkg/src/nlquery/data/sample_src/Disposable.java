package com.sample.ui;

public interface Disposable {
    void dispose();
}
