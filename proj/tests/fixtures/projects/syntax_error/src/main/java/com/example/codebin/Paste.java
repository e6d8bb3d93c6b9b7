package com.example.codebin;

public class Paste {
    private String id;
    private String content;
}
